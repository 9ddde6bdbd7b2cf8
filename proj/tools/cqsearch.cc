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

// cqsearch: single-parity-query search experiments.
//
//   cqsearch simulate --n 4 --marks 3 --eta 3 --seed 1
//   cqsearch analytic --n 16 --t 1 --eta 64 --trials 10000 --seed 5
//   cqsearch gates --n 1024 --schedule-c 1
//
// Exit status: 0 success, 2 domain error, 3 capacity error, 64 usage error.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "cli/commands.h"
#include "cli/document.h"
#include "cli/run_config.h"
#include "cqsearch/errors.h"

namespace {

constexpr int kExitDomainError = 2;
constexpr int kExitCapacityError = 3;
constexpr int kExitUsage = 64;

}  // namespace

int main(int argc, char** argv) {
  using cqsearch::cli::OutputFormat;
  using cqsearch::cli::RunConfig;
  using cqsearch::cli::Subcommand;

  CLI::App app{"Single complex-query quantum search: simulation, analysis, gate counts"};
  app.set_config("--config", "", "TOML/INI file mirroring the flags; flags override it");
  app.fallthrough();
  app.require_subcommand(1);

  RunConfig config;
  std::size_t eta = 0, t = 0;
  double schedule_c = 1.0;
  std::string marks, mask, output;
  std::uint64_t trials = 0;

  app.add_option("--n", config.n_items, "Number of items N (power of two)")->required();
  auto* eta_opt = app.add_option("--eta", eta, "Number of sample registers");
  auto* sched_opt = app.add_option("--schedule-c", schedule_c,
                                   "eta = ceil(c * N * log2(N)^2) (default when --eta is absent)");
  eta_opt->excludes(sched_opt);
  auto* marks_opt = app.add_option("--marks", marks, "Comma separated marked items, 1-based");
  auto* mask_opt = app.add_option("--mask", mask, "Hex mask of marked items, bit j-1 = f(j)");
  auto* t_opt = app.add_option("--t", t, "Mark items 1..t");
  marks_opt->excludes(mask_opt)->excludes(t_opt);
  mask_opt->excludes(t_opt);
  app.add_option("--seed", config.seed, "RNG seed");
  auto* trials_opt = app.add_option("--trials", trials, "Monte Carlo trials");
  std::string tie_break = "lowest", cost_model = "paper", format = "json";
  app.add_option("--tie-break", tie_break, "Majority tie-break policy")
      ->check(CLI::IsMember({"lowest", "random"}));
  app.add_option("--cost-model", cost_model, "Gate cost model")
      ->check(CLI::IsMember({"paper", "naive"}));
  app.add_option("--per-control-cost", config.per_control_cost,
                 "Two-bit gates per control of a multi-controlled gate");
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--capture", config.capture, "Keep psi_1..psi_6 and report state checks");
  app.add_option("--max-qubits", config.max_qubits, "Simulator qubit cap")
      ->envname(cqsearch::cli::kQubitCapEnv);
  app.add_option("--threads", config.threads, "Monte Carlo worker threads");
  app.add_option("--output", output, "Write the document here instead of stdout");

  auto* simulate = app.add_subcommand("simulate", "Run the full circuit on the statevector");
  auto* analytic = app.add_subcommand("analytic", "Closed-form amplitudes and success probability");
  auto* gates = app.add_subcommand("gates", "Gate tallies and query counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (simulate->parsed()) config.subcommand = Subcommand::kSimulate;
  if (analytic->parsed()) config.subcommand = Subcommand::kAnalytic;
  if (gates->parsed()) config.subcommand = Subcommand::kGates;
  if (eta_opt->count()) config.eta = eta;
  if (sched_opt->count()) config.schedule_c = schedule_c;
  if (marks_opt->count()) config.marks = marks;
  if (mask_opt->count()) config.mask = mask;
  if (t_opt->count()) config.t = t;
  if (trials_opt->count()) config.trials = trials;
  config.tie_break = tie_break == "random" ? cqsearch::TieBreakPolicy::kRandom
                                           : cqsearch::TieBreakPolicy::kLowestIndex;
  config.cost_model = *cqsearch::parse_cost_model(cost_model);
  config.format = format == "csv" ? OutputFormat::kCsv : OutputFormat::kJson;

  try {
    const std::string text =
        cqsearch::cli::render(cqsearch::cli::run_command(config), config.format);
    if (output.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(output, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot open " << output << "\n";
        return 1;
      }
      out << text;
    }
  } catch (const cqsearch::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacityError;
  } catch (const cqsearch::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomainError;
  }
  return 0;
}
