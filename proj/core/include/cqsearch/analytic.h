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

// Closed-form description of the state after one inversion step and of the
// majority vote over eta independent measurements of it.
//
// With t of N items marked, one round of phase flip plus diffusion leaves
// amplitude k = (3 - 4t/N)/sqrt(N) on each marked item and
// l = (1 - 4t/N)/sqrt(N) on each unmarked one.

#ifndef CQSEARCH_ANALYTIC_H_
#define CQSEARCH_ANALYTIC_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cqsearch/circuit.h"
#include "cqsearch/oracle.h"
#include "cqsearch/statevector.h"

namespace cqsearch {

struct AmplitudeModel {
  std::size_t n_items = 0;
  std::size_t marked_count = 0;
  double k = 0.0;
  double l = 0.0;
  double p_marked = 0.0;    // k^2
  double p_unmarked = 0.0;  // l^2
};

// DomainError unless N is a power of two and t <= N.
AmplitudeModel amplitudes(std::size_t n_items, std::size_t marked_count);

// The expanded polynomial forms of k^2 and l^2:
//   (9 - 24t/N + (4t/N)^2) / N   and   (1 - 8t/N + (4t/N)^2) / N.
double marked_probability_polynomial(std::size_t n_items, std::size_t marked_count);
double unmarked_probability_polynomial(std::size_t n_items, std::size_t marked_count);

// Probability of measuring item j at index j - 1.
std::vector<double> per_sample_distribution(const AmplitudeModel& model,
                                            const BooleanPredicate& pred);

// sum_{f(x)=1} k|x> + sum_{f(x)=0} l|x> on nu qubits, item x stored as x - 1.
StateVector single_register_state(const AmplitudeModel& model, const BooleanPredicate& pred);

// single_register_state^{(x) eta}, register i on qubits (i-1)*nu .. i*nu - 1.
StateVector analytic_product_state(const AmplitudeModel& model, const BooleanPredicate& pred,
                                   std::size_t eta, int max_qubits = kDefaultQubitCap);

// (sum_x (-1)^{f(x)} |x>)^{(x) eta}: the sample registers after the phase
// kickback and the disentangling pass.
StateVector signed_uniform_product_state(const BooleanPredicate& pred, std::size_t eta,
                                         int max_qubits = kDefaultQubitCap);

inline constexpr double kDefaultExactWorkCap = 2e9;

// Number of inner-loop updates exact_success_probability performs.
double exact_success_work(std::size_t n_items, std::size_t marked_count, std::size_t eta,
                          TieBreakPolicy tie_break);

// Pr[f(x0) = 1] where x0 is the majority item of eta draws from `probs`
// (probs[j - 1] for item j). Exact: sums the multinomial weights of every
// count vector (c_1..c_N), organised as a dynamic program over items for
// each candidate maximum. Random ties are credited fractionally
// (marked maxima / all maxima). CapacityError above work_cap.
double majority_success_probability(std::span<const double> probs, const BooleanPredicate& pred,
                                    std::size_t eta, TieBreakPolicy tie_break,
                                    double work_cap = kDefaultExactWorkCap);

double exact_success_probability(const AmplitudeModel& model, const BooleanPredicate& pred,
                                 std::size_t eta, TieBreakPolicy tie_break,
                                 double work_cap = kDefaultExactWorkCap);

struct MonteCarloOptions {
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  TieBreakPolicy tie_break = TieBreakPolicy::kLowestIndex;
  // Worker threads; the estimate does not depend on this.
  unsigned threads = 1;
};

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
};

// Each trial draws its own RNG stream from (seed, trial index).
MonteCarloEstimate monte_carlo_success_probability(const AmplitudeModel& model,
                                                   const BooleanPredicate& pred,
                                                   std::size_t eta,
                                                   const MonteCarloOptions& options);

// |estimate - exact| <= k standard errors, the standard error being the
// larger of the estimate's own and the one implied by `exact` (the former is
// zero whenever every trial agrees).
bool within_standard_errors(const MonteCarloEstimate& mc, double exact, double k);

// ceil(c * N * (log2 N)^2).
std::size_t eta_schedule(std::size_t n_items, double constant_c);

}  // namespace cqsearch

#endif  // CQSEARCH_ANALYTIC_H_
