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

#include "cqsearch/analytic.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <thread>

#include "cqsearch/errors.h"

namespace cqsearch {
namespace {

void check_model(const AmplitudeModel& model, const BooleanPredicate& pred) {
  if (pred.size() != model.n_items || pred.marked_count() != model.marked_count) {
    throw DomainError("predicate (N = " + std::to_string(pred.size()) + ", t = " +
                      std::to_string(pred.marked_count()) + ") does not match model (N = " +
                      std::to_string(model.n_items) + ", t = " +
                      std::to_string(model.marked_count) + ")");
  }
}

// W[s * (eta + 1) + c] = C(s + c, c) p^c for s + c <= eta: the factor by
// which appending c copies of one item to s earlier draws multiplies the
// multinomial weight.
std::vector<double> extension_weights(double p, std::size_t eta) {
  const std::size_t stride = eta + 1;
  std::vector<double> w(stride * stride, 0.0);
  const double log_p = p > 0.0 ? std::log(p) : 0.0;
  for (std::size_t s = 0; s <= eta; ++s) {
    w[s * stride] = 1.0;
    if (p <= 0.0) continue;
    for (std::size_t c = 1; s + c <= eta; ++c) {
      const double log_w = std::lgamma(static_cast<double>(s + c + 1)) -
                           std::lgamma(static_cast<double>(s + 1)) -
                           std::lgamma(static_cast<double>(c + 1)) + static_cast<double>(c) * log_p;
      w[s * stride + c] = std::exp(log_w);
    }
  }
  return w;
}

// Distinct probability values share one weight table.
struct WeightTables {
  std::vector<std::vector<double>> tables;
  std::vector<std::size_t> table_of_item;

  WeightTables(std::span<const double> probs, std::size_t eta) {
    std::vector<double> distinct;
    for (double p : probs) {
      auto it = std::find(distinct.begin(), distinct.end(), p);
      if (it == distinct.end()) {
        table_of_item.push_back(distinct.size());
        distinct.push_back(p);
        tables.push_back(extension_weights(p, eta));
      } else {
        table_of_item.push_back(static_cast<std::size_t>(it - distinct.begin()));
      }
    }
  }

  const double* item(std::size_t j) const { return tables[table_of_item[j]].data(); }
};

std::size_t min_max_count(std::size_t n_items, std::size_t eta) {
  return std::max<std::size_t>(1, (eta + n_items - 1) / n_items);
}

// Phase 0: no item has reached the maximum m yet; 1 / 2: the first (lowest
// index) item to reach it is marked / unmarked.
double lowest_index_success(std::span<const double> probs, const BooleanPredicate& pred,
                            std::size_t eta, const WeightTables& weights) {
  const std::size_t n = probs.size();
  const std::size_t stride = eta + 1;
  double success = 0.0;
  std::vector<double> cur(3 * stride), nxt(3 * stride);
  for (std::size_t m = min_max_count(n, eta); m <= eta; ++m) {
    std::fill(cur.begin(), cur.end(), 0.0);
    cur[0] = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(nxt.begin(), nxt.end(), 0.0);
      const double* w = weights.item(j);
      const std::size_t later_capacity = (n - j - 1) * m;
      const std::size_t reach_phase = pred.marked(j + 1) ? 1 : 2;
      for (std::size_t phase = 0; phase < 3; ++phase) {
        for (std::size_t s = 0; s <= eta; ++s) {
          const double v = cur[phase * stride + s];
          if (v == 0.0) continue;
          const std::size_t c_max = std::min(m, eta - s);
          for (std::size_t c = 0; c <= c_max; ++c) {
            if (s + c + later_capacity < eta) continue;
            const double wc = w[s * stride + c];
            if (wc == 0.0) continue;
            std::size_t next_phase = phase;
            if (phase == 0 && c == m) next_phase = reach_phase;
            nxt[next_phase * stride + s + c] += v * wc;
          }
        }
      }
      std::swap(cur, nxt);
    }
    success += cur[1 * stride + eta];
  }
  return success;
}

// State (s, a, b): s draws so far, a marked and b unmarked items at the
// maximum m. Success is credited as a / (a + b).
double random_tie_success(std::span<const double> probs, const BooleanPredicate& pred,
                          std::size_t eta, const WeightTables& weights) {
  const std::size_t n = probs.size();
  const std::size_t t = pred.marked_count();
  const std::size_t u = n - t;
  const std::size_t stride = eta + 1;
  const std::size_t a_dim = t + 1;
  const std::size_t b_dim = u + 1;
  auto at = [&](std::size_t s, std::size_t a, std::size_t b) { return (s * a_dim + a) * b_dim + b; };

  double success = 0.0;
  std::vector<double> cur(stride * a_dim * b_dim), nxt(cur.size());
  for (std::size_t m = min_max_count(n, eta); m <= eta; ++m) {
    std::fill(cur.begin(), cur.end(), 0.0);
    cur[0] = 1.0;
    std::size_t seen_marked = 0;
    std::size_t seen_unmarked = 0;
    for (std::size_t j = 0; j < n; ++j) {
      std::fill(nxt.begin(), nxt.end(), 0.0);
      const double* w = weights.item(j);
      const bool is_marked = pred.marked(j + 1);
      const std::size_t later_capacity = (n - j - 1) * m;
      for (std::size_t s = 0; s <= eta; ++s) {
        for (std::size_t a = 0; a <= seen_marked; ++a) {
          for (std::size_t b = 0; b <= seen_unmarked; ++b) {
            const double v = cur[at(s, a, b)];
            if (v == 0.0) continue;
            const std::size_t c_max = std::min(m, eta - s);
            for (std::size_t c = 0; c <= c_max; ++c) {
              if (s + c + later_capacity < eta) continue;
              const double wc = w[s * stride + c];
              if (wc == 0.0) continue;
              std::size_t na = a;
              std::size_t nb = b;
              if (c == m) (is_marked ? na : nb) += 1;
              nxt[at(s + c, na, nb)] += v * wc;
            }
          }
        }
      }
      (is_marked ? seen_marked : seen_unmarked) += 1;
      std::swap(cur, nxt);
    }
    for (std::size_t a = 0; a <= t; ++a) {
      for (std::size_t b = 0; b <= u; ++b) {
        if (a == 0) continue;
        success += cur[at(eta, a, b)] * static_cast<double>(a) / static_cast<double>(a + b);
      }
    }
  }
  return success;
}

}  // namespace

AmplitudeModel amplitudes(std::size_t n_items, std::size_t marked_count) {
  exact_log2(n_items);
  if (marked_count > n_items) {
    throw DomainError("t = " + std::to_string(marked_count) + " exceeds N = " +
                      std::to_string(n_items));
  }
  const double n = static_cast<double>(n_items);
  const double ratio = 4.0 * static_cast<double>(marked_count) / n;
  AmplitudeModel model;
  model.n_items = n_items;
  model.marked_count = marked_count;
  model.k = (3.0 - ratio) / std::sqrt(n);
  model.l = (1.0 - ratio) / std::sqrt(n);
  model.p_marked = model.k * model.k;
  model.p_unmarked = model.l * model.l;
  return model;
}

double marked_probability_polynomial(std::size_t n_items, std::size_t marked_count) {
  const double n = static_cast<double>(n_items);
  const double t = static_cast<double>(marked_count);
  const double r = 4.0 * t / n;
  return (9.0 - 24.0 * t / n + r * r) / n;
}

double unmarked_probability_polynomial(std::size_t n_items, std::size_t marked_count) {
  const double n = static_cast<double>(n_items);
  const double t = static_cast<double>(marked_count);
  const double r = 4.0 * t / n;
  return (1.0 - 8.0 * t / n + r * r) / n;
}

std::vector<double> per_sample_distribution(const AmplitudeModel& model,
                                            const BooleanPredicate& pred) {
  check_model(model, pred);
  std::vector<double> probs(model.n_items);
  for (Item x = 1; x <= model.n_items; ++x) {
    probs[x - 1] = pred.marked(x) ? model.p_marked : model.p_unmarked;
  }
  return probs;
}

StateVector single_register_state(const AmplitudeModel& model, const BooleanPredicate& pred) {
  check_model(model, pred);
  std::vector<Amplitude> amps(model.n_items);
  for (Item x = 1; x <= model.n_items; ++x) amps[x - 1] = pred.marked(x) ? model.k : model.l;
  return StateVector::normalized(std::move(amps));
}

StateVector analytic_product_state(const AmplitudeModel& model, const BooleanPredicate& pred,
                                   std::size_t eta, int max_qubits) {
  if (eta < 1) throw DomainError("eta must be at least 1");
  const int nu = exact_log2(model.n_items);
  const std::size_t qubits = static_cast<std::size_t>(nu) * eta;
  if (qubits > static_cast<std::size_t>(std::min(max_qubits, kMaxAddressableQubits))) {
    throw CapacityError("product state needs nu*eta = " + std::to_string(qubits) +
                        " qubits, simulator cap is " + std::to_string(max_qubits));
  }
  const StateVector one = single_register_state(model, pred);
  StateVector product = one;
  for (std::size_t i = 1; i < eta; ++i) product = tensor_product(product, one, max_qubits);
  return product;
}

StateVector signed_uniform_product_state(const BooleanPredicate& pred, std::size_t eta,
                                         int max_qubits) {
  AmplitudeModel signs;
  signs.n_items = pred.size();
  signs.marked_count = pred.marked_count();
  signs.k = -1.0;
  signs.l = 1.0;
  return analytic_product_state(signs, pred, eta, max_qubits);
}

double exact_success_work(std::size_t n_items, std::size_t marked_count, std::size_t eta,
                          TieBreakPolicy tie_break) {
  const double n = static_cast<double>(n_items);
  const double e = static_cast<double>(eta);
  const double states =
      tie_break == TieBreakPolicy::kLowestIndex
          ? 3.0 * (e + 1.0)
          : (e + 1.0) * (static_cast<double>(marked_count) + 1.0) *
                (static_cast<double>(n_items - std::min(marked_count, n_items)) + 1.0);
  const double m_lo = static_cast<double>(min_max_count(std::max<std::size_t>(n_items, 1), eta));
  // sum_{m = m_lo}^{eta} (m + 1)
  const double sum_m = (e - m_lo + 1.0) * (e + m_lo + 2.0) / 2.0;
  return n * states * std::max(sum_m, 0.0);
}

double majority_success_probability(std::span<const double> probs, const BooleanPredicate& pred,
                                    std::size_t eta, TieBreakPolicy tie_break, double work_cap) {
  if (probs.size() != pred.size() || probs.empty()) {
    throw DomainError("distribution and predicate sizes differ");
  }
  if (eta < 1) throw DomainError("eta must be at least 1");
  const double work = exact_success_work(pred.size(), pred.marked_count(), eta, tie_break);
  if (work > work_cap) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "exact majority probability for N = %zu, eta = %zu needs ~%.3g updates, "
                  "cap is %.3g",
                  pred.size(), eta, work, work_cap);
    throw CapacityError(buf);
  }
  if (pred.marked_count() == 0) return 0.0;
  const WeightTables weights(probs, eta);
  const double p = tie_break == TieBreakPolicy::kLowestIndex
                       ? lowest_index_success(probs, pred, eta, weights)
                       : random_tie_success(probs, pred, eta, weights);
  return std::clamp(p, 0.0, 1.0);
}

double exact_success_probability(const AmplitudeModel& model, const BooleanPredicate& pred,
                                 std::size_t eta, TieBreakPolicy tie_break, double work_cap) {
  return majority_success_probability(per_sample_distribution(model, pred), pred, eta, tie_break,
                                      work_cap);
}

MonteCarloEstimate monte_carlo_success_probability(const AmplitudeModel& model,
                                                   const BooleanPredicate& pred,
                                                   std::size_t eta,
                                                   const MonteCarloOptions& options) {
  if (options.trials < 1) throw DomainError("trials must be at least 1");
  if (eta < 1) throw DomainError("eta must be at least 1");
  const std::vector<double> probs = per_sample_distribution(model, pred);
  std::vector<double> cdf(probs.size());
  double running = 0.0;
  std::size_t last_nonzero = 0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    running += probs[k];
    cdf[k] = running;
    if (probs[k] > 0.0) last_nonzero = k;
  }

  auto run_range = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<std::size_t> counts(probs.size());
    std::uint64_t successes = 0;
    for (std::uint64_t trial = begin; trial < end; ++trial) {
      std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                        static_cast<std::uint32_t>(options.seed >> 32),
                        static_cast<std::uint32_t>(trial),
                        static_cast<std::uint32_t>(trial >> 32)};
      std::mt19937_64 rng(seq);
      std::fill(counts.begin(), counts.end(), 0);
      for (std::size_t draw = 0; draw < eta; ++draw) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        std::size_t k = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), u) -
                                                 cdf.begin());
        if (k >= probs.size()) k = last_nonzero;
        ++counts[k];
      }
      if (pred.marked(select_majority(counts, options.tie_break, rng))) ++successes;
    }
    return successes;
  };

  const unsigned threads = static_cast<unsigned>(
      std::clamp<std::uint64_t>(options.threads, 1, options.trials));
  std::uint64_t successes = 0;
  if (threads == 1) {
    successes = run_range(0, options.trials);
  } else {
    std::vector<std::uint64_t> partial(threads, 0);
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = (options.trials + threads - 1) / threads;
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t begin = std::min(options.trials, w * chunk);
      const std::uint64_t end = std::min(options.trials, begin + chunk);
      workers.emplace_back([&, w, begin, end] { partial[w] = run_range(begin, end); });
    }
    workers.clear();
    for (std::uint64_t s : partial) successes += s;
  }

  MonteCarloEstimate result;
  result.successes = successes;
  result.trials = options.trials;
  result.estimate = static_cast<double>(successes) / static_cast<double>(options.trials);
  result.std_error =
      std::sqrt(result.estimate * (1.0 - result.estimate) / static_cast<double>(options.trials));
  return result;
}

bool within_standard_errors(const MonteCarloEstimate& mc, double exact, double k) {
  const double p = std::clamp(exact, 0.0, 1.0);
  const double null_se = std::sqrt(p * (1.0 - p) / static_cast<double>(std::max<std::uint64_t>(mc.trials, 1)));
  const double se = std::max(mc.std_error, null_se);
  return std::abs(mc.estimate - exact) <= k * se + 1e-12;
}

std::size_t eta_schedule(std::size_t n_items, double constant_c) {
  if (n_items < 2) throw DomainError("eta schedule needs N >= 2");
  if (!(constant_c > 0.0)) throw DomainError("schedule constant must be positive");
  const double nu = static_cast<double>(exact_log2(n_items));
  const double eta = std::ceil(constant_c * static_cast<double>(n_items) * nu * nu);
  return static_cast<std::size_t>(eta);
}

}  // namespace cqsearch
