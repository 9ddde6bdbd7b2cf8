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

#ifndef CQSEARCH_TOOLS_CLI_COMMANDS_H_
#define CQSEARCH_TOOLS_CLI_COMMANDS_H_

#include "cli/document.h"
#include "cli/run_config.h"

namespace cqsearch::cli {

// Full circuit path: simulate, measure, vote. With `capture` also reports
// the disentanglement and factorization checks.
Document cmd_simulate(const RunConfig& config);

// Amplitudes, per-sample probabilities and majority success probability
// (exact when the dynamic program fits its cap, Monte Carlo with --trials).
Document cmd_analytic(const RunConfig& config);

// Predicted gate tally, asymptotic report, query comparison and, for
// simulable instances, the emitted-gate cross-check.
Document cmd_gates(const RunConfig& config);

Document run_command(const RunConfig& config);

}  // namespace cqsearch::cli

#endif  // CQSEARCH_TOOLS_CLI_COMMANDS_H_
