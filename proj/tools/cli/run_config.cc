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

#include "cli/run_config.h"

#include "cqsearch/analytic.h"
#include "cqsearch/errors.h"

namespace cqsearch::cli {

std::string_view to_string(Subcommand subcommand) {
  switch (subcommand) {
    case Subcommand::kSimulate: return "simulate";
    case Subcommand::kAnalytic: return "analytic";
    case Subcommand::kGates: return "gates";
  }
  return "unknown";
}

void validate(const RunConfig& config) {
  if (config.eta && config.schedule_c) {
    throw DomainError("--eta and --schedule-c are mutually exclusive");
  }
  const int sources = (config.marks ? 1 : 0) + (config.mask ? 1 : 0) + (config.t ? 1 : 0);
  if (sources > 1) throw DomainError("give at most one of --marks, --mask, --t");
  if (config.n_items < 2) throw DomainError("--n must be a power of two >= 2");
  exact_log2(config.n_items);
  if (config.eta && *config.eta < 1) throw DomainError("--eta must be at least 1");
  if (config.trials && *config.trials < 1) throw DomainError("--trials must be at least 1");
}

std::size_t resolve_eta(const RunConfig& config) {
  if (config.eta) return *config.eta;
  return eta_schedule(config.n_items, resolve_schedule_constant(config));
}

double resolve_schedule_constant(const RunConfig& config) {
  return config.schedule_c.value_or(1.0);
}

BooleanPredicate resolve_predicate(const RunConfig& config) {
  if (config.marks) return BooleanPredicate::parse_marks(config.n_items, *config.marks);
  if (config.mask) return BooleanPredicate::from_mask(config.n_items, *config.mask);
  if (config.t) return BooleanPredicate::first_marked(config.n_items, *config.t);
  return BooleanPredicate::first_marked(config.n_items, 0);
}

}  // namespace cqsearch::cli
