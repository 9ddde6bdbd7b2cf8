// Copyright 2026 The cqsearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The eight-step single-query search circuit: construction as an explicit
// gate list, execution on StateVector, measurement of the sample registers
// and the classical majority vote.

#ifndef CQSEARCH_CIRCUIT_H_
#define CQSEARCH_CIRCUIT_H_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cqsearch/oracle.h"
#include "cqsearch/statevector.h"

namespace cqsearch {

enum class GateKind { kHadamard, kSigmaZ, kValueControlledFlip, kValueControlledPhase };

// Step 1 (prepare |0...0>) emits no gates; it only labels psi_1.
enum class Step { kStep1, kStep2a, kStep2b, kStep3, kStep4, kStep5, kStep6 };

inline constexpr std::array<Step, 7> kAllSteps = {Step::kStep1, Step::kStep2a, Step::kStep2b,
                                                  Step::kStep3, Step::kStep4, Step::kStep5,
                                                  Step::kStep6};

std::string_view to_string(GateKind kind);
std::string_view to_string(Step step);
std::optional<GateKind> parse_gate_kind(std::string_view text);
std::optional<Step> parse_step(std::string_view text);

struct GateRecord {
  GateKind kind = GateKind::kHadamard;
  Step step = Step::kStep1;
  std::vector<int> controls;
  // Acted-on qubit; -1 for value_controlled_phase, which has no target.
  int target = -1;
  std::uint64_t control_value = 0;

  bool operator==(const GateRecord&) const = default;
};

struct GateBlock {
  Step step = Step::kStep1;
  std::vector<GateRecord> gates;

  bool operator==(const GateBlock&) const = default;
};

class Circuit {
 public:
  Circuit(SearchParameters params, std::vector<GateBlock> blocks)
      : params_(params), blocks_(std::move(blocks)) {}

  const SearchParameters& params() const { return params_; }
  RegisterLayout layout() const { return RegisterLayout(params_); }
  std::span<const GateBlock> blocks() const { return blocks_; }

  // Gates in execution order.
  std::vector<GateRecord> gates() const;
  std::size_t gate_count() const;
  std::size_t block_count(Step step) const;

 private:
  SearchParameters params_;
  std::vector<GateBlock> blocks_;
};

// Blocks, in order: step2a, step2b, step3, step4, step5, step6.
//   step2a  H on each of the nu*eta sample qubits and on the ancilla
//   step2b  sigma_z on the ancilla
//   step3   for i in 1..eta, j in 1..N: flip incidence qubit j when sample
//           register i holds j (register value j - 1)
//   step4   for each marked j: flip the ancilla when incidence qubit j is 1
//   step5   step3 again
//   step6   inversion about average on each sample register
// CapacityError if the layout exceeds max_qubits.
Circuit build_circuit(const SearchParameters& params, const BooleanPredicate& pred,
                      int max_qubits = kDefaultQubitCap);

void apply_gate(StateVector& state, const GateRecord& gate);

// sample_part (x) |0>^N (x) (|0> - |1>)/sqrt(2): the shape of psi_2, psi_5 and
// psi_6 given the state of the nu*eta sample qubits.
StateVector embed_sample_state(const StateVector& sample_part, const RegisterLayout& layout,
                               int max_qubits = kDefaultQubitCap);

// One record per line, each block introduced by "block <step> <gate count>":
//   step3 value_controlled_flip controls=0,1 target=6 value=2
std::string to_trace(const Circuit& circuit);
std::vector<GateBlock> parse_trace(std::string_view text);

struct RunOptions {
  bool capture = false;
  int max_qubits = kDefaultQubitCap;
};

struct CircuitRun {
  StateVector final_state;
  // psi_1 .. psi_6 when captured, otherwise empty.
  std::vector<StateVector> intermediates;
};

CircuitRun run_circuit(const SearchParameters& params, const BooleanPredicate& pred,
                       const RunOptions& options = {});

// Per-register marginal of the sample registers. ψ6 is a product state, so
// drawing each register from its own marginal samples the joint distribution.
std::vector<std::vector<double>> sample_register_marginals(const StateVector& state,
                                                           const RegisterLayout& layout);

// One value per sample register, deterministic in seed.
SampleTuple measure_samples(const StateVector& state, const RegisterLayout& layout,
                            std::uint64_t seed);

enum class TieBreakPolicy { kLowestIndex, kRandom };

std::string_view to_string(TieBreakPolicy policy);

struct TieBreak {
  TieBreakPolicy policy = TieBreakPolicy::kLowestIndex;
  std::uint64_t seed = 0;
};

struct SearchOutcome {
  SampleTuple samples;
  std::map<Item, std::size_t> frequencies;
  Item winner = 0;
  bool winner_satisfies = false;
  bool tie_detected = false;
};

// Item with maximal count (counts[j - 1] belongs to item j). Random ties are
// resolved with one draw from rng.
Item select_majority(std::span<const std::size_t> counts, TieBreakPolicy policy,
                     std::mt19937_64& rng, bool* tie_detected = nullptr);

// DomainError on an empty sample set.
SearchOutcome majority_postprocess(const SampleTuple& samples, const BooleanPredicate& pred,
                                   const TieBreak& tie_break = {});

struct SearchOptions {
  std::uint64_t seed = 0;
  TieBreakPolicy tie_break = TieBreakPolicy::kLowestIndex;
  int max_qubits = kDefaultQubitCap;
};

// measure_samples and majority_postprocess on an already computed psi_6.
SearchOutcome sample_and_vote(const StateVector& final_state, const SearchParameters& params,
                              const BooleanPredicate& pred, const SearchOptions& options);

// run_circuit, then sample_and_vote.
SearchOutcome run_search(const SearchParameters& params, const BooleanPredicate& pred,
                         const SearchOptions& options = {});

}  // namespace cqsearch

#endif  // CQSEARCH_CIRCUIT_H_
