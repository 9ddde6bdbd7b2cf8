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

#include <benchmark/benchmark.h>

#include "cqsearch/analytic.h"
#include "cqsearch/circuit.h"
#include "cqsearch/statevector.h"

namespace {

using namespace cqsearch;

void BM_Hadamard(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector sv(n);
  for (auto _ : state) {
    for (int q = 0; q < n; ++q) sv.apply_hadamard(q);
    benchmark::DoNotOptimize(sv.amplitude(0));
  }
  state.SetItemsProcessed(state.iterations() * n);
}
BENCHMARK(BM_Hadamard)->Arg(10)->Arg(16)->Arg(20);

void BM_ValueControlledFlip(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  StateVector sv(n);
  const std::vector<int> controls = {0, 1, 2};
  for (auto _ : state) {
    sv.apply_value_controlled_flip(controls, 5, n - 1);
    benchmark::DoNotOptimize(sv.amplitude(0));
  }
}
BENCHMARK(BM_ValueControlledFlip)->Arg(10)->Arg(16)->Arg(20);

void BM_RunCircuit(benchmark::State& state) {
  const auto params = SearchParameters::create(static_cast<std::size_t>(state.range(0)),
                                               static_cast<std::size_t>(state.range(1)));
  const auto pred = BooleanPredicate::first_marked(params.n_items(), 1);
  for (auto _ : state) benchmark::DoNotOptimize(run_circuit(params, pred).final_state.amplitude(0));
}
BENCHMARK(BM_RunCircuit)->Args({2, 3})->Args({4, 3})->Args({4, 5})->Args({8, 4});

void BM_ExactSuccess(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto eta = static_cast<std::size_t>(state.range(1));
  const auto pred = BooleanPredicate::first_marked(n, 1);
  const auto model = amplitudes(n, 1);
  for (auto _ : state)
    benchmark::DoNotOptimize(exact_success_probability(model, pred, eta, TieBreakPolicy::kLowestIndex));
}
BENCHMARK(BM_ExactSuccess)->Args({16, 64})->Args({16, 256})->Args({64, 128});

void BM_MonteCarlo(benchmark::State& state) {
  const auto pred = BooleanPredicate::first_marked(16, 1);
  const auto model = amplitudes(16, 1);
  const MonteCarloOptions opts{static_cast<std::uint64_t>(state.range(0)), 1};
  for (auto _ : state)
    benchmark::DoNotOptimize(monte_carlo_success_probability(model, pred, 64, opts).estimate);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
