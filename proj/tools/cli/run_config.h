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

#ifndef CQSEARCH_TOOLS_CLI_RUN_CONFIG_H_
#define CQSEARCH_TOOLS_CLI_RUN_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "cqsearch/circuit.h"
#include "cqsearch/complexity.h"
#include "cqsearch/oracle.h"
#include "cqsearch/statevector.h"

namespace cqsearch::cli {

enum class Subcommand { kSimulate, kAnalytic, kGates };
enum class OutputFormat { kJson, kCsv };

// Environment variable overriding the simulator qubit cap.
inline constexpr const char* kQubitCapEnv = "CQSEARCH_MAX_QUBITS";

struct RunConfig {
  Subcommand subcommand = Subcommand::kSimulate;
  std::size_t n_items = 0;

  // At most one of these; neither means schedule constant 1.
  std::optional<std::size_t> eta;
  std::optional<double> schedule_c;

  // At most one of these; none means nothing is marked.
  std::optional<std::string> marks;
  std::optional<std::string> mask;
  std::optional<std::size_t> t;

  std::uint64_t seed = 0;
  std::optional<std::uint64_t> trials;
  TieBreakPolicy tie_break = TieBreakPolicy::kLowestIndex;
  CostModelKind cost_model = CostModelKind::kPaper;
  double per_control_cost = kDefaultPerControlCost;
  OutputFormat format = OutputFormat::kJson;
  bool capture = false;
  int max_qubits = kDefaultQubitCap;
  unsigned threads = 1;
};

std::string_view to_string(Subcommand subcommand);

// DomainError when both eta and schedule_c, or more than one predicate
// source, are set.
void validate(const RunConfig& config);

std::size_t resolve_eta(const RunConfig& config);
double resolve_schedule_constant(const RunConfig& config);
BooleanPredicate resolve_predicate(const RunConfig& config);

}  // namespace cqsearch::cli

#endif  // CQSEARCH_TOOLS_CLI_RUN_CONFIG_H_
