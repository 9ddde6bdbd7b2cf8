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

#include "cli/commands.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "cqsearch/analytic.h"
#include "cqsearch/circuit.h"
#include "cqsearch/complexity.h"
#include "cqsearch/errors.h"
#include "cqsearch/statevector.h"

namespace cqsearch::cli {
namespace {

constexpr double kFidelityTolerance = 1e-10;

Document eta_params(const RunConfig& config, std::size_t eta) {
  Document d;
  d["eta"] = eta;
  if (config.eta) {
    d["eta_source"] = "explicit";
  } else {
    d["eta_source"] = "schedule";
    d["schedule_c"] = resolve_schedule_constant(config);
  }
  return d;
}

Document common_params(const RunConfig& config, const SearchParameters& params,
                       const BooleanPredicate& pred) {
  Document d;
  d["subcommand"] = std::string(to_string(config.subcommand));
  d["n"] = params.n_items();
  d["nu"] = params.nu();
  d.update(eta_params(config, params.eta()));
  d["t"] = pred.marked_count();
  d["mask"] = pred.to_mask_hex();
  return d;
}

Document step_json(const StepTally& st) {
  Document d;
  d["hadamards"] = st.hadamards;
  d["sigma_z"] = st.sigma_z;
  d["multi_controlled_flips"] = st.multi_controlled_flips;
  d["multi_controlled_phases"] = st.multi_controlled_phases;
  d["elementary"] = st.elementary;
  return d;
}

Document tally_json(const GateTally& tally) {
  Document d;
  d["hadamards"] = tally.hadamards;
  d["sigma_z"] = tally.sigma_z;
  d["multi_controlled_flips"] = tally.multi_controlled_flips;
  d["multi_controlled_phases"] = tally.multi_controlled_phases;
  d["elementary_total"] = tally.elementary_total;
  d["classical_sort_comparisons"] = tally.classical_sort_comparisons;
  Document steps = Document::object();
  for (const auto& [step, st] : tally.by_step) steps[std::string(to_string(step))] = step_json(st);
  d["by_step"] = steps;
  return d;
}

}  // namespace

Document cmd_simulate(const RunConfig& config) {
  validate(config);
  const auto params = SearchParameters::create(config.n_items, resolve_eta(config));
  const BooleanPredicate pred = resolve_predicate(config);
  const RegisterLayout layout(params);

  Document doc;
  Document p = common_params(config, params, pred);
  p["marks"] = pred.to_marks_string();
  p["seed"] = config.seed;
  p["tie_break"] = std::string(to_string(config.tie_break));
  p["total_qubits"] = layout.total_qubits();
  p["max_qubits"] = config.max_qubits;
  p["capture"] = config.capture;
  doc["params"] = p;

  const Circuit circuit = build_circuit(params, pred, config.max_qubits);
  const CircuitRun run = run_circuit(params, pred, {config.capture, config.max_qubits});
  const SearchOutcome outcome = sample_and_vote(
      run.final_state, params, pred, {config.seed, config.tie_break, config.max_qubits});

  Document result;
  result["samples"] = outcome.samples.values;
  Document freq = Document::object();
  for (const auto& [item, count] : outcome.frequencies) freq[std::to_string(item)] = count;
  result["frequencies"] = freq;
  result["winner"] = outcome.winner;
  result["winner_satisfies"] = outcome.winner_satisfies ? 1 : 0;
  result["tie_detected"] = outcome.tie_detected;
  doc["result"] = result;

  Document checks;
  checks["oracle_blocks"] = circuit.block_count(Step::kStep4);
  checks["gate_count"] = circuit.gate_count();
  checks["final_norm_deviation"] = std::abs(run.final_state.norm_squared() - 1.0);
  if (config.capture) {
    const StateVector& psi5 = run.intermediates.at(4);
    const StateVector& psi6 = run.intermediates.at(5);
    const double p_zero = psi5.marginal_distribution(layout.incidence_register()).front();
    checks["disentanglement_probability"] = p_zero;
    checks["disentanglement_pass"] = p_zero >= 1.0 - kFidelityTolerance;

    const StateVector kicked = embed_sample_state(
        signed_uniform_product_state(pred, params.eta(), config.max_qubits), layout,
        config.max_qubits);
    const double kick_fidelity = fidelity_mod_phase(psi5, kicked);
    checks["phase_kickback_fidelity"] = kick_fidelity;
    checks["phase_kickback_pass"] = kick_fidelity >= 1.0 - kFidelityTolerance;

    const AmplitudeModel model = amplitudes(params.n_items(), pred.marked_count());
    const StateVector expected = embed_sample_state(
        analytic_product_state(model, pred, params.eta(), config.max_qubits), layout,
        config.max_qubits);
    const double fidelity = fidelity_mod_phase(psi6, expected);
    checks["factorization_fidelity"] = fidelity;
    checks["factorization_pass"] = fidelity >= 1.0 - kFidelityTolerance;
  }
  doc["checks"] = checks;
  return doc;
}

Document cmd_analytic(const RunConfig& config) {
  validate(config);
  const std::size_t eta = resolve_eta(config);
  const auto params = SearchParameters::create(config.n_items, eta);
  const BooleanPredicate pred = resolve_predicate(config);
  const std::size_t t = pred.marked_count();
  const AmplitudeModel model = amplitudes(config.n_items, t);

  Document doc;
  Document p = common_params(config, params, pred);
  p["seed"] = config.seed;
  p["trials"] = config.trials ? Document(*config.trials) : Document(nullptr);
  p["tie_break"] = std::string(to_string(config.tie_break));
  doc["params"] = p;

  Document result;
  result["k"] = model.k;
  result["l"] = model.l;
  result["p_marked"] = model.p_marked;
  result["p_unmarked"] = model.p_unmarked;
  result["p_marked_polynomial"] = marked_probability_polynomial(config.n_items, t);
  result["p_unmarked_polynomial"] = unmarked_probability_polynomial(config.n_items, t);

  std::optional<double> exact;
  try {
    exact = exact_success_probability(model, pred, eta, config.tie_break);
  } catch (const CapacityError& e) {
    if (!config.trials) {
      throw CapacityError(std::string(e.what()) +
                          "; pass --trials <count> for a Monte Carlo estimate");
    }
  }
  result["exact_success_probability"] = exact ? Document(*exact) : Document(nullptr);

  std::optional<MonteCarloEstimate> mc;
  if (config.trials) {
    mc = monte_carlo_success_probability(
        model, pred, eta, {*config.trials, config.seed, config.tie_break, config.threads});
    Document m;
    m["estimate"] = mc->estimate;
    m["std_error"] = mc->std_error;
    m["successes"] = mc->successes;
    m["trials"] = mc->trials;
    result["monte_carlo"] = m;
  }
  doc["result"] = result;

  Document checks;
  const double n = static_cast<double>(config.n_items);
  const double td = static_cast<double>(t);
  checks["normalization_residual"] =
      std::abs(td * model.k * model.k + (n - td) * model.l * model.l - 1.0);
  checks["polynomial_form_residual"] =
      std::max(std::abs(model.p_marked - marked_probability_polynomial(config.n_items, t)),
               std::abs(model.p_unmarked - unmarked_probability_polynomial(config.n_items, t)));
  if (exact && mc) {
    const double gap = std::abs(mc->estimate - *exact);
    checks["monte_carlo_gap"] = gap;
    checks["monte_carlo_within_4se"] = within_standard_errors(*mc, *exact, 4.0);
  }
  doc["checks"] = checks;
  return doc;
}

Document cmd_gates(const RunConfig& config) {
  validate(config);
  const auto params = SearchParameters::create(config.n_items, resolve_eta(config));
  const BooleanPredicate pred = resolve_predicate(config);
  const CostModel model{config.cost_model, config.per_control_cost};
  const RegisterLayout layout(params);

  Document doc;
  Document p = common_params(config, params, pred);
  p["cost_model"] = std::string(to_string(config.cost_model));
  p["per_control_cost"] = config.per_control_cost;
  doc["params"] = p;

  const GateTally predicted = predict_tally(params, pred, model);
  Document result;
  result["tally"] = tally_json(predicted);

  const AsymptoticReport report =
      asymptotic_report(config.n_items, resolve_schedule_constant(config));
  Document a;
  a["constant_c"] = report.constant_c;
  a["eta"] = report.eta;
  a["nu_eta"] = report.nu_eta;
  a["eta_log_eta"] = report.eta_log_eta;
  a["n_eta"] = report.n_eta;
  a["paper_total_claim"] = report.paper_total_claim;
  result["asymptotic"] = a;

  if (pred.marked_count() >= 1) {
    const QueryComparison q = query_count_comparison(config.n_items, pred.marked_count());
    Document c;
    c["complex_queries"] = q.complex_queries;
    c["elementary_queries"] = q.elementary_queries;
    result["query_comparison"] = c;
  }
  doc["result"] = result;

  Document checks;
  const int cap = std::min(config.max_qubits, kMaxAddressableQubits);
  if (layout.total_qubits() <= static_cast<std::size_t>(cap)) {
    const Circuit circuit = build_circuit(params, pred, config.max_qubits);
    const GateTally enumerated = tally_circuit(circuit, model);
    checks["cross_check"] = enumerated.same_counts(predicted) ? "pass" : "fail";
    checks["oracle_blocks"] = circuit.block_count(Step::kStep4);
  } else {
    checks["cross_check"] = "skipped";
  }
  doc["checks"] = checks;
  return doc;
}

Document run_command(const RunConfig& config) {
  switch (config.subcommand) {
    case Subcommand::kSimulate: return cmd_simulate(config);
    case Subcommand::kAnalytic: return cmd_analytic(config);
    case Subcommand::kGates: return cmd_gates(config);
  }
  throw DomainError("unknown subcommand");
}

}  // namespace cqsearch::cli
