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

#include "cqsearch/circuit.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cqsearch/errors.h"

namespace cqsearch {
namespace {

constexpr std::uint64_t kTieStreamSalt = 0x9e3779b97f4a7c15ULL;

struct KindName {
  GateKind kind;
  std::string_view name;
};
constexpr KindName kKindNames[] = {
    {GateKind::kHadamard, "hadamard"},
    {GateKind::kSigmaZ, "sigma_z"},
    {GateKind::kValueControlledFlip, "value_controlled_flip"},
    {GateKind::kValueControlledPhase, "value_controlled_phase"},
};

struct StepName {
  Step step;
  std::string_view name;
};
constexpr StepName kStepNames[] = {
    {Step::kStep1, "step1"},   {Step::kStep2a, "step2a"}, {Step::kStep2b, "step2b"},
    {Step::kStep3, "step3"},   {Step::kStep4, "step4"},   {Step::kStep5, "step5"},
    {Step::kStep6, "step6"},
};

// Step 3 and step 5 are the same gate sequence.
std::vector<GateRecord> parity_pass(const RegisterLayout& layout, Step step) {
  std::vector<GateRecord> gates;
  gates.reserve(layout.eta() * layout.n_items());
  for (std::size_t i = 1; i <= layout.eta(); ++i) {
    const std::vector<int> reg = layout.sample_register(i);
    for (Item j = 1; j <= layout.n_items(); ++j) {
      gates.push_back(GateRecord{GateKind::kValueControlledFlip, step, reg,
                                 layout.incidence_qubit(j), j - 1});
    }
  }
  return gates;
}

double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::size_t draw_index(std::span<const double> probs, double u) {
  double cumulative = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (probs[k] <= 0.0) continue;
    last_nonzero = k;
    cumulative += probs[k];
    if (u < cumulative) return k;
  }
  return last_nonzero;
}

std::uint64_t parse_u64(std::string_view text, std::string_view line) {
  std::uint64_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw DomainError("bad number in trace line: " + std::string(line));
  }
  return value;
}

std::string_view field_value(std::string_view token, std::string_view key,
                             std::string_view line) {
  if (!token.starts_with(key) || token.size() <= key.size() || token[key.size()] != '=') {
    throw DomainError("expected " + std::string(key) + "=... in trace line: " +
                      std::string(line));
  }
  return token.substr(key.size() + 1);
}

}  // namespace

std::string_view to_string(GateKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::string_view to_string(Step step) {
  for (const auto& [s, name] : kStepNames) {
    if (s == step) return name;
  }
  return "unknown";
}

std::optional<GateKind> parse_gate_kind(std::string_view text) {
  for (const auto& [k, name] : kKindNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

std::optional<Step> parse_step(std::string_view text) {
  for (const auto& [s, name] : kStepNames) {
    if (name == text) return s;
  }
  return std::nullopt;
}

std::string_view to_string(TieBreakPolicy policy) {
  return policy == TieBreakPolicy::kLowestIndex ? "lowest" : "random";
}

std::vector<GateRecord> Circuit::gates() const {
  std::vector<GateRecord> out;
  out.reserve(gate_count());
  for (const GateBlock& block : blocks_) {
    out.insert(out.end(), block.gates.begin(), block.gates.end());
  }
  return out;
}

std::size_t Circuit::gate_count() const {
  std::size_t n = 0;
  for (const GateBlock& block : blocks_) n += block.gates.size();
  return n;
}

std::size_t Circuit::block_count(Step step) const {
  return static_cast<std::size_t>(std::count_if(
      blocks_.begin(), blocks_.end(), [step](const GateBlock& b) { return b.step == step; }));
}

Circuit build_circuit(const SearchParameters& params, const BooleanPredicate& pred,
                      int max_qubits) {
  if (pred.size() != params.n_items()) {
    throw DomainError("predicate has " + std::to_string(pred.size()) + " items but N = " +
                      std::to_string(params.n_items()));
  }
  const RegisterLayout layout(params);
  if (layout.total_qubits() > static_cast<std::size_t>(std::min(max_qubits, kMaxAddressableQubits))) {
    throw CapacityError("circuit needs nu*eta + N + 1 = " + std::to_string(layout.nu()) + "*" +
                        std::to_string(layout.eta()) + " + " + std::to_string(layout.n_items()) +
                        " + 1 = " + std::to_string(layout.total_qubits()) +
                        " qubits, simulator cap is " +
                        std::to_string(std::min(max_qubits, kMaxAddressableQubits)));
  }
  const int ancilla = layout.ancilla();
  std::vector<GateBlock> blocks;

  GateBlock step2a{Step::kStep2a, {}};
  for (std::size_t q = 0; q < layout.sample_qubit_count(); ++q) {
    step2a.gates.push_back({GateKind::kHadamard, Step::kStep2a, {}, static_cast<int>(q), 0});
  }
  step2a.gates.push_back({GateKind::kHadamard, Step::kStep2a, {}, ancilla, 0});
  blocks.push_back(std::move(step2a));

  blocks.push_back({Step::kStep2b, {{GateKind::kSigmaZ, Step::kStep2b, {}, ancilla, 0}}});
  blocks.push_back({Step::kStep3, parity_pass(layout, Step::kStep3)});

  GateBlock step4{Step::kStep4, {}};
  for (Item j : pred.marks()) {
    step4.gates.push_back(
        {GateKind::kValueControlledFlip, Step::kStep4, {layout.incidence_qubit(j)}, ancilla, 1});
  }
  blocks.push_back(std::move(step4));

  blocks.push_back({Step::kStep5, parity_pass(layout, Step::kStep5)});

  GateBlock step6{Step::kStep6, {}};
  for (std::size_t i = 1; i <= layout.eta(); ++i) {
    const std::vector<int> reg = layout.sample_register(i);
    for (int q : reg) step6.gates.push_back({GateKind::kHadamard, Step::kStep6, {}, q, 0});
    step6.gates.push_back({GateKind::kValueControlledPhase, Step::kStep6, reg, -1, 0});
    for (int q : reg) step6.gates.push_back({GateKind::kHadamard, Step::kStep6, {}, q, 0});
  }
  blocks.push_back(std::move(step6));

  return Circuit(params, std::move(blocks));
}

void apply_gate(StateVector& state, const GateRecord& gate) {
  switch (gate.kind) {
    case GateKind::kHadamard:
      state.apply_hadamard(gate.target);
      break;
    case GateKind::kSigmaZ:
      state.apply_sigma_z(gate.target);
      break;
    case GateKind::kValueControlledFlip:
      state.apply_value_controlled_flip(gate.controls, gate.control_value, gate.target);
      break;
    case GateKind::kValueControlledPhase:
      state.apply_value_controlled_phase(gate.controls, gate.control_value);
      break;
  }
}

StateVector embed_sample_state(const StateVector& sample_part, const RegisterLayout& layout,
                               int max_qubits) {
  if (static_cast<std::size_t>(sample_part.n_qubits()) != layout.sample_qubit_count()) {
    throw DomainError("sample state has " + std::to_string(sample_part.n_qubits()) +
                      " qubits, layout expects " + std::to_string(layout.sample_qubit_count()));
  }
  const StateVector incidence(static_cast<int>(layout.n_items()), max_qubits);
  const StateVector minus = StateVector::normalized({Amplitude{1.0}, Amplitude{-1.0}});
  return tensor_product(tensor_product(sample_part, incidence, max_qubits), minus, max_qubits);
}

std::string to_trace(const Circuit& circuit) {
  std::ostringstream out;
  for (const GateBlock& block : circuit.blocks()) {
    out << "block " << to_string(block.step) << ' ' << block.gates.size() << '\n';
    for (const GateRecord& g : block.gates) {
      out << to_string(g.step) << ' ' << to_string(g.kind) << " controls=";
      if (g.controls.empty()) out << '-';
      for (std::size_t k = 0; k < g.controls.size(); ++k) {
        out << (k ? "," : "") << g.controls[k];
      }
      out << " target=";
      if (g.target < 0) {
        out << '-';
      } else {
        out << g.target;
      }
      out << " value=" << g.control_value << '\n';
    }
  }
  return out.str();
}

std::vector<GateBlock> parse_trace(std::string_view text) {
  std::vector<GateBlock> blocks;
  std::size_t expected = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string head, second;
    fields >> head >> second;
    if (head == "block") {
      if (!blocks.empty() && blocks.back().gates.size() != expected) {
        throw DomainError("trace block " + std::string(to_string(blocks.back().step)) +
                          " is truncated");
      }
      const auto step = parse_step(second);
      std::string count;
      fields >> count;
      if (!step) throw DomainError("unknown step in trace line: " + line);
      expected = parse_u64(count, line);
      blocks.push_back({*step, {}});
      continue;
    }
    const auto step = parse_step(head);
    const auto kind = parse_gate_kind(second);
    if (!step || !kind) throw DomainError("unrecognized trace line: " + line);
    if (blocks.empty() || blocks.back().step != *step) {
      throw DomainError("gate outside its block: " + line);
    }
    std::string controls_tok, target_tok, value_tok;
    fields >> controls_tok >> target_tok >> value_tok;
    GateRecord g{*kind, *step, {}, -1, 0};
    std::string_view controls = field_value(controls_tok, "controls", line);
    if (controls != "-") {
      while (!controls.empty()) {
        const auto comma = controls.find(',');
        g.controls.push_back(static_cast<int>(parse_u64(controls.substr(0, comma), line)));
        if (comma == std::string_view::npos) break;
        controls.remove_prefix(comma + 1);
      }
    }
    const std::string_view target = field_value(target_tok, "target", line);
    if (target != "-") g.target = static_cast<int>(parse_u64(target, line));
    g.control_value = parse_u64(field_value(value_tok, "value", line), line);
    blocks.back().gates.push_back(std::move(g));
  }
  if (!blocks.empty() && blocks.back().gates.size() != expected) {
    throw DomainError("trace block " + std::string(to_string(blocks.back().step)) +
                      " is truncated");
  }
  return blocks;
}

CircuitRun run_circuit(const SearchParameters& params, const BooleanPredicate& pred,
                       const RunOptions& options) {
  const Circuit circuit = build_circuit(params, pred, options.max_qubits);
  CircuitRun run{make_basis_state(circuit.layout(), options.max_qubits), {}};
  if (options.capture) run.intermediates.push_back(run.final_state);  // psi_1
  for (const GateBlock& block : circuit.blocks()) {
    for (const GateRecord& gate : block.gates) apply_gate(run.final_state, gate);
    // psi_2 is complete after step 2b; steps 3..6 each end one psi.
    if (options.capture && block.step != Step::kStep2a) {
      run.intermediates.push_back(run.final_state);
    }
  }
  return run;
}

std::vector<std::vector<double>> sample_register_marginals(const StateVector& state,
                                                           const RegisterLayout& layout) {
  std::vector<std::vector<double>> marginals;
  marginals.reserve(layout.eta());
  for (std::size_t i = 1; i <= layout.eta(); ++i) {
    marginals.push_back(state.marginal_distribution(layout.sample_register(i)));
  }
  return marginals;
}

SampleTuple measure_samples(const StateVector& state, const RegisterLayout& layout,
                            std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  SampleTuple samples;
  for (const std::vector<double>& marginal : sample_register_marginals(state, layout)) {
    samples.values.push_back(draw_index(marginal, uniform_unit(rng)) + 1);
  }
  return samples;
}

Item select_majority(std::span<const std::size_t> counts, TieBreakPolicy policy,
                     std::mt19937_64& rng, bool* tie_detected) {
  if (counts.empty()) throw DomainError("no items to choose from");
  const std::size_t best = *std::max_element(counts.begin(), counts.end());
  std::size_t ties = 0;
  Item first = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] != best) continue;
    if (ties++ == 0) first = k + 1;
  }
  if (tie_detected) *tie_detected = ties > 1;
  if (policy == TieBreakPolicy::kLowestIndex || ties == 1) return first;
  std::size_t pick = static_cast<std::size_t>(rng() % ties);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] == best && pick-- == 0) return k + 1;
  }
  return first;
}

SearchOutcome majority_postprocess(const SampleTuple& samples, const BooleanPredicate& pred,
                                   const TieBreak& tie_break) {
  if (samples.values.empty()) throw DomainError("majority vote over an empty sample set");
  samples.validate(pred.size());
  SearchOutcome outcome;
  outcome.samples = samples;
  std::vector<std::size_t> counts(pred.size(), 0);
  for (Item x : samples.values) {
    ++counts[x - 1];
    ++outcome.frequencies[x];
  }
  std::mt19937_64 rng(tie_break.seed);
  outcome.winner = select_majority(counts, tie_break.policy, rng, &outcome.tie_detected);
  outcome.winner_satisfies = pred.marked(outcome.winner);
  return outcome;
}

SearchOutcome sample_and_vote(const StateVector& final_state, const SearchParameters& params,
                              const BooleanPredicate& pred, const SearchOptions& options) {
  const SampleTuple samples = measure_samples(final_state, RegisterLayout(params), options.seed);
  return majority_postprocess(samples, pred, {options.tie_break, options.seed ^ kTieStreamSalt});
}

SearchOutcome run_search(const SearchParameters& params, const BooleanPredicate& pred,
                         const SearchOptions& options) {
  const CircuitRun run = run_circuit(params, pred, {false, options.max_qubits});
  return sample_and_vote(run.final_state, params, pred, options);
}

}  // namespace cqsearch
