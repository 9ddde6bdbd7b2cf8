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

// Gate-count accounting for the search circuit.
//
// Raw counts are per abstract gate (Hadamard, sigma_z, value-controlled flip,
// value-controlled phase). The elementary total weights them with a cost
// model: single-qubit gates and singly controlled gates cost 1, a gate with
// k >= 2 controls costs c * k two-bit gates.
//
// Steps 3 and 5 emit eta * N decoder gates each. The `paper` model charges
// one nu-controlled gate per register per pass (eta per pass, O(nu * eta)
// overall); `naive_decoder` charges every emitted gate.

#ifndef CQSEARCH_COMPLEXITY_H_
#define CQSEARCH_COMPLEXITY_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "cqsearch/circuit.h"
#include "cqsearch/oracle.h"

namespace cqsearch {

enum class CostModelKind { kPaper, kNaiveDecoder };

std::string_view to_string(CostModelKind kind);
std::optional<CostModelKind> parse_cost_model(std::string_view text);

// Placeholder constant for decomposing a k-controlled gate into two-bit
// gates. Only scaling is meaningful; the value is not normative.
inline constexpr double kDefaultPerControlCost = 48.0;

struct CostModel {
  CostModelKind kind = CostModelKind::kPaper;
  double per_control_cost = kDefaultPerControlCost;

  // 1 for k <= 1, per_control_cost * k otherwise.
  double cost_of_multi_controlled(int controls) const;
};

struct StepTally {
  std::uint64_t hadamards = 0;
  std::uint64_t sigma_z = 0;
  std::uint64_t multi_controlled_flips = 0;
  std::uint64_t multi_controlled_phases = 0;
  double elementary = 0.0;

  bool same_counts(const StepTally& other) const {
    return hadamards == other.hadamards && sigma_z == other.sigma_z &&
           multi_controlled_flips == other.multi_controlled_flips &&
           multi_controlled_phases == other.multi_controlled_phases;
  }
};

struct GateTally {
  std::uint64_t hadamards = 0;
  std::uint64_t sigma_z = 0;
  std::uint64_t multi_controlled_flips = 0;
  std::uint64_t multi_controlled_phases = 0;
  double elementary_total = 0.0;
  // Classical post-processing, not part of elementary_total.
  std::uint64_t classical_sort_comparisons = 0;
  std::map<Step, StepTally> by_step;

  // Raw per-category and per-step equality; ignores the weighted totals.
  bool same_counts(const GateTally& other) const;
};

// Closed form:
//   hadamards = 3 nu eta + 1, sigma_z = 1, phases = eta,
//   flips = 2 eta N + t, sort comparisons = ceil(eta log2 eta).
GateTally predict_tally(const SearchParameters& params, const BooleanPredicate& pred,
                        const CostModel& model);

// Counts an emitted circuit under the same weighting rules.
GateTally tally_circuit(const Circuit& circuit, const CostModel& model);

std::uint64_t sort_comparisons(std::size_t eta);

struct AsymptoticReport {
  std::size_t n_items = 0;
  double constant_c = 0.0;
  std::uint64_t eta = 0;
  std::uint64_t nu = 0;
  std::uint64_t nu_eta = 0;
  std::uint64_t eta_log_eta = 0;
  std::uint64_t n_eta = 0;
  // N^2 (log2 N)^2
  std::uint64_t paper_total_claim = 0;
};

AsymptoticReport asymptotic_report(std::size_t n_items, double constant_c);

struct QueryComparison {
  std::uint64_t complex_queries = 1;
  std::uint64_t elementary_queries = 0;
};

// One parity query against ceil(c * sqrt(N / t)) elementary queries for
// iterated amplitude amplification. DomainError for t == 0 or t > N.
QueryComparison query_count_comparison(std::size_t n_items, std::size_t marked_count,
                                       double grover_constant = 1.0);

}  // namespace cqsearch

#endif  // CQSEARCH_COMPLEXITY_H_
