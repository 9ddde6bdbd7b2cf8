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

#include "cqsearch/complexity.h"

#include <cmath>
#include <string>

#include "cqsearch/analytic.h"
#include "cqsearch/errors.h"

namespace cqsearch {
namespace {

// Weighted cost of one step's raw counts. Decoder flips (steps 3, 5) and
// phases carry nu controls; the step 4 flips carry one.
double step_cost(Step step, const StepTally& raw, const CostModel& model, int nu,
                 std::size_t n_items) {
  double cost = static_cast<double>(raw.hadamards + raw.sigma_z);
  cost += static_cast<double>(raw.multi_controlled_phases) * model.cost_of_multi_controlled(nu);
  if (step == Step::kStep3 || step == Step::kStep5) {
    double population = static_cast<double>(raw.multi_controlled_flips);
    if (model.kind == CostModelKind::kPaper) population /= static_cast<double>(n_items);
    cost += population * model.cost_of_multi_controlled(nu);
  } else {
    cost += static_cast<double>(raw.multi_controlled_flips) * model.cost_of_multi_controlled(1);
  }
  return cost;
}

void finish(GateTally& tally, const CostModel& model, const SearchParameters& params) {
  tally.hadamards = tally.sigma_z = tally.multi_controlled_flips = 0;
  tally.multi_controlled_phases = 0;
  tally.elementary_total = 0.0;
  for (auto& [step, st] : tally.by_step) {
    st.elementary = step_cost(step, st, model, params.nu(), params.n_items());
    tally.hadamards += st.hadamards;
    tally.sigma_z += st.sigma_z;
    tally.multi_controlled_flips += st.multi_controlled_flips;
    tally.multi_controlled_phases += st.multi_controlled_phases;
    tally.elementary_total += st.elementary;
  }
  tally.classical_sort_comparisons = sort_comparisons(params.eta());
}

}  // namespace

std::string_view to_string(CostModelKind kind) {
  return kind == CostModelKind::kPaper ? "paper" : "naive";
}

std::optional<CostModelKind> parse_cost_model(std::string_view text) {
  if (text == "paper") return CostModelKind::kPaper;
  if (text == "naive" || text == "naive_decoder") return CostModelKind::kNaiveDecoder;
  return std::nullopt;
}

double CostModel::cost_of_multi_controlled(int controls) const {
  if (controls <= 1) return 1.0;
  return per_control_cost * static_cast<double>(controls);
}

bool GateTally::same_counts(const GateTally& other) const {
  if (hadamards != other.hadamards || sigma_z != other.sigma_z ||
      multi_controlled_flips != other.multi_controlled_flips ||
      multi_controlled_phases != other.multi_controlled_phases ||
      classical_sort_comparisons != other.classical_sort_comparisons ||
      by_step.size() != other.by_step.size()) {
    return false;
  }
  for (const auto& [step, st] : by_step) {
    auto it = other.by_step.find(step);
    if (it == other.by_step.end() || !st.same_counts(it->second)) return false;
  }
  return true;
}

std::uint64_t sort_comparisons(std::size_t eta) {
  if (eta <= 1) return 0;
  const double e = static_cast<double>(eta);
  return static_cast<std::uint64_t>(std::ceil(e * std::log2(e)));
}

GateTally predict_tally(const SearchParameters& params, const BooleanPredicate& pred,
                        const CostModel& model) {
  if (pred.size() != params.n_items()) {
    throw DomainError("predicate has " + std::to_string(pred.size()) + " items but N = " +
                      std::to_string(params.n_items()));
  }
  const std::uint64_t nu = static_cast<std::uint64_t>(params.nu());
  const std::uint64_t eta = params.eta();
  const std::uint64_t n = params.n_items();
  GateTally tally;
  for (Step step : kAllSteps) tally.by_step[step] = {};
  tally.by_step[Step::kStep2a].hadamards = nu * eta + 1;
  tally.by_step[Step::kStep2b].sigma_z = 1;
  tally.by_step[Step::kStep3].multi_controlled_flips = eta * n;
  tally.by_step[Step::kStep4].multi_controlled_flips = pred.marked_count();
  tally.by_step[Step::kStep5].multi_controlled_flips = eta * n;
  tally.by_step[Step::kStep6].hadamards = 2 * nu * eta;
  tally.by_step[Step::kStep6].multi_controlled_phases = eta;
  finish(tally, model, params);
  return tally;
}

GateTally tally_circuit(const Circuit& circuit, const CostModel& model) {
  GateTally tally;
  for (Step step : kAllSteps) tally.by_step[step] = {};
  for (const GateBlock& block : circuit.blocks()) {
    for (const GateRecord& g : block.gates) {
      StepTally& st = tally.by_step[g.step];
      switch (g.kind) {
        case GateKind::kHadamard: ++st.hadamards; break;
        case GateKind::kSigmaZ: ++st.sigma_z; break;
        case GateKind::kValueControlledFlip: ++st.multi_controlled_flips; break;
        case GateKind::kValueControlledPhase: ++st.multi_controlled_phases; break;
      }
    }
  }
  finish(tally, model, circuit.params());
  return tally;
}

AsymptoticReport asymptotic_report(std::size_t n_items, double constant_c) {
  AsymptoticReport r;
  r.n_items = n_items;
  r.constant_c = constant_c;
  r.eta = eta_schedule(n_items, constant_c);
  r.nu = static_cast<std::uint64_t>(exact_log2(n_items));
  r.nu_eta = r.nu * r.eta;
  r.eta_log_eta = sort_comparisons(r.eta);
  r.n_eta = n_items * r.eta;
  r.paper_total_claim = n_items * n_items * r.nu * r.nu;
  return r;
}

QueryComparison query_count_comparison(std::size_t n_items, std::size_t marked_count,
                                       double grover_constant) {
  if (marked_count == 0) throw DomainError("query comparison needs t >= 1");
  if (marked_count > n_items) {
    throw DomainError("t = " + std::to_string(marked_count) + " exceeds N = " +
                      std::to_string(n_items));
  }
  if (!(grover_constant > 0.0)) throw DomainError("grover constant must be positive");
  QueryComparison q;
  const double ratio = static_cast<double>(n_items) / static_cast<double>(marked_count);
  q.elementary_queries = static_cast<std::uint64_t>(std::ceil(grover_constant * std::sqrt(ratio)));
  return q;
}

}  // namespace cqsearch
