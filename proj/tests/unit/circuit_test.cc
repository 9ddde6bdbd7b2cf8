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

#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "cqsearch/analytic.h"
#include "cqsearch/errors.h"
#include "gtest/gtest.h"
#include "support/oracles.h"

namespace cqsearch {
namespace {

constexpr double kStateTol = 1e-10;

std::vector<BooleanPredicate> all_predicates(std::size_t n) {
  std::vector<BooleanPredicate> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Item> items;
    for (Item j = 1; j <= n; ++j)
      if ((mask >> (j - 1)) & 1) items.push_back(j);
    out.push_back(BooleanPredicate::from_marks(n, items));
  }
  return out;
}

std::size_t count_in(const GateBlock& block, GateKind kind) {
  std::size_t n = 0;
  for (const auto& g : block.gates) n += g.kind == kind;
  return n;
}

const GateBlock& block_of(const Circuit& c, Step step) {
  for (const auto& b : c.blocks())
    if (b.step == step) return b;
  throw std::runtime_error("missing block");
}

// Register value of sample register i (1-based) in basis index `index`.
std::size_t register_value(std::uint64_t index, std::size_t i, int nu) {
  return (index >> ((i - 1) * nu)) & ((std::uint64_t{1} << nu) - 1);
}

TEST(BuildCircuitTest, GateCountsSmallestInstance) {
  const auto params = SearchParameters::create(2, 2);
  const auto c = build_circuit(params, BooleanPredicate::from_marks(2, std::vector<Item>{1}));
  EXPECT_EQ(count_in(block_of(c, Step::kStep2a), GateKind::kHadamard), 3u);
  EXPECT_EQ(block_of(c, Step::kStep2a).gates.size(), 3u);
  EXPECT_EQ(block_of(c, Step::kStep2b).gates.size(), 1u);
  EXPECT_EQ(count_in(block_of(c, Step::kStep3), GateKind::kValueControlledFlip), 4u);
  EXPECT_EQ(count_in(block_of(c, Step::kStep5), GateKind::kValueControlledFlip), 4u);
  EXPECT_EQ(count_in(block_of(c, Step::kStep4), GateKind::kValueControlledFlip), 1u);
}

TEST(BuildCircuitTest, StructuralInvariants) {
  for (std::size_t n : {2u, 4u}) {
    for (std::size_t eta = 1; eta <= 3; ++eta) {
      const auto params = SearchParameters::create(n, eta);
      for (const auto& pred : all_predicates(n)) {
        const auto c = build_circuit(params, pred);
        EXPECT_EQ(c.block_count(Step::kStep4), 1u);
        EXPECT_EQ(block_of(c, Step::kStep4).gates.size(), pred.marked_count());
        const auto& s3 = block_of(c, Step::kStep3).gates;
        const auto& s5 = block_of(c, Step::kStep5).gates;
        ASSERT_EQ(s3.size(), s5.size());
        for (std::size_t k = 0; k < s3.size(); ++k) {
          GateRecord relabeled = s3[k];
          relabeled.step = Step::kStep5;
          EXPECT_EQ(relabeled, s5[k]);
        }
        for (const auto& block : c.blocks())
          for (const auto& g : block.gates) EXPECT_EQ(g.step, block.step);
      }
    }
  }
}

TEST(BuildCircuitTest, Errors) {
  EXPECT_THROW(build_circuit(SearchParameters::create(32, 4), BooleanPredicate::first_marked(32, 1)),
               CapacityError);
  EXPECT_THROW(build_circuit(SearchParameters::create(4, 1), BooleanPredicate::first_marked(8, 1)),
               DomainError);
}

TEST(TraceTest, RoundTrip) {
  for (std::size_t n : {2u, 4u}) {
    for (const auto& pred : all_predicates(n)) {
      const auto c = build_circuit(SearchParameters::create(n, 2), pred);
      const auto parsed = parse_trace(to_trace(c));
      ASSERT_EQ(parsed.size(), c.blocks().size());
      for (std::size_t b = 0; b < parsed.size(); ++b) EXPECT_EQ(parsed[b], c.blocks()[b]);
    }
  }
}

TEST(TraceTest, LineFormat) {
  const auto c = build_circuit(SearchParameters::create(2, 1), BooleanPredicate::first_marked(2, 1));
  const std::string trace = to_trace(c);
  EXPECT_NE(trace.find("block step4 1\nstep4 value_controlled_flip controls=1 target=3 value=1\n"),
            std::string::npos);
  EXPECT_NE(trace.find("step6 value_controlled_phase controls=0 target=- value=0"),
            std::string::npos);
  EXPECT_THROW(parse_trace("block step4 2\nstep4 value_controlled_flip controls=1 target=3 value=1\n"),
               DomainError);
  EXPECT_THROW(parse_trace("step4 value_controlled_flip controls=1 target=3 value=1\n"), DomainError);
  EXPECT_THROW(parse_trace("block step9 0\n"), DomainError);
  EXPECT_THROW(parse_trace("block step3 1\nstep3 bogus controls=- target=1 value=0\n"), DomainError);
}

TEST(RunCircuitTest, CapturesSixStates) {
  const auto run = run_circuit(SearchParameters::create(2, 2), BooleanPredicate::first_marked(2, 1),
                               {true, kDefaultQubitCap});
  ASSERT_EQ(run.intermediates.size(), 6u);
  EXPECT_EQ(run.intermediates[0].amplitude(0), Amplitude(1.0));
  EXPECT_NEAR(fidelity_mod_phase(run.intermediates[5], run.final_state), 1.0, 1e-15);
  for (const auto& s : run.intermediates) EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
  EXPECT_TRUE(run_circuit(SearchParameters::create(2, 1), BooleanPredicate::first_marked(2, 1))
                  .intermediates.empty());
}

TEST(RunCircuitTest, Psi2IsUniformOverSampleQubitsAndAncilla) {
  for (std::size_t n : {2u, 4u}) {
    const auto params = SearchParameters::create(n, 2);
    const RegisterLayout layout(params);
    const auto run = run_circuit(params, BooleanPredicate::first_marked(n, 1), {true});
    const StateVector& psi2 = run.intermediates[1];
    const double magnitude = std::pow(2.0, -(static_cast<double>(layout.sample_qubit_count()) + 1) / 2);
    const std::uint64_t incidence_mask = ((std::uint64_t{1} << n) - 1) << layout.sample_qubit_count();
    for (std::uint64_t i = 0; i < psi2.dimension(); ++i) {
      const double expected = (i & incidence_mask) ? 0.0 : magnitude;
      EXPECT_NEAR(std::abs(psi2.amplitude(i)), expected, 1e-12);
      // Ancilla in |0> - |1>.
      if ((i & incidence_mask) == 0 && ((i >> layout.ancilla()) & 1)) {
        EXPECT_LT(psi2.amplitude(i).real(), 0.0);
      }
    }
    const auto ancilla = psi2.marginal_distribution(std::vector<int>{layout.ancilla()});
    EXPECT_NEAR(ancilla[0], 0.5, 1e-12);
    EXPECT_NEAR(ancilla[1], 0.5, 1e-12);
    const auto reg = psi2.marginal_distribution(layout.sample_register(1));
    for (double p : reg) EXPECT_NEAR(p, 1.0 / static_cast<double>(n), 1e-12);
  }
}

// psi_3 is supported only where the incidence register equals the chi vector
// of the sample tuple; psi_4 differs from psi_3 by (-1)^{f~(X)} there.
TEST(RunCircuitTest, Psi3HoldsChiAndPsi4CarriesTheParityPhase) {
  for (std::size_t n : {2u, 4u}) {
    for (std::size_t eta = 1; eta <= 3; ++eta) {
      const auto params = SearchParameters::create(n, eta);
      const RegisterLayout layout(params);
      for (const auto& pred : all_predicates(n)) {
        const auto run = run_circuit(params, pred, {true});
        const StateVector& psi3 = run.intermediates[2];
        const StateVector& psi4 = run.intermediates[3];
        for (std::uint64_t i = 0; i < psi3.dimension(); ++i) {
          SampleTuple tuple;
          for (std::size_t r = 1; r <= eta; ++r)
            tuple.values.push_back(register_value(i, r, params.nu()) + 1);
          const auto x = incidence_of_tuple(tuple, n);
          bool consistent = true;
          for (Item j = 1; j <= n; ++j)
            consistent &= (((i >> layout.incidence_qubit(j)) & 1) != 0) == x.contains(j);
          if (!consistent) {
            EXPECT_NEAR(std::abs(psi3.amplitude(i)), 0.0, 1e-12);
            continue;
          }
          const double sign = complex_query(pred, x) ? -1.0 : 1.0;
          EXPECT_NEAR(std::abs(psi4.amplitude(i) - sign * psi3.amplitude(i)), 0.0, 1e-12);
        }
      }
    }
  }
}

TEST(RunCircuitTest, DisentanglementAndPhaseKickback) {
  for (std::size_t n : {2u, 4u}) {
    for (std::size_t eta = 1; eta <= 3; ++eta) {
      const auto params = SearchParameters::create(n, eta);
      const RegisterLayout layout(params);
      const int nu = params.nu();
      for (const auto& pred : all_predicates(n)) {
        const auto run = run_circuit(params, pred, {true});
        const StateVector& psi5 = run.intermediates[4];
        EXPECT_GE(psi5.marginal_distribution(layout.incidence_register())[0], 1.0 - kStateTol);

        // sum_x (-1)^{f(x)} |x>^{(x) eta} (x) |0>^N (x) (|0> - |1>), built
        // directly over the full index space.
        std::vector<Amplitude> expected(psi5.dimension(), 0.0);
        for (std::uint64_t samples = 0; samples < (std::uint64_t{1} << (nu * eta)); ++samples) {
          double sign = 1.0;
          for (std::size_t r = 1; r <= eta; ++r)
            if (pred.marked(register_value(samples, r, nu) + 1)) sign = -sign;
          expected[samples] = sign;
          expected[samples | (std::uint64_t{1} << layout.ancilla())] = -sign;
        }
        EXPECT_GE(fidelity_mod_phase(psi5, StateVector::normalized(expected)), 1.0 - kStateTol);
      }
    }
  }
}

// psi_6 against (D * signed uniform)^{(x) eta} with D as a dense matrix.
TEST(RunCircuitTest, FactorizesIntoDenseMatrixOracle) {
  for (std::size_t n : {2u, 4u}) {
    const int nu = exact_log2(n);
    const auto d = testing::inversion_about_average_matrix(nu);
    for (std::size_t eta = 1; eta <= 2; ++eta) {
      const auto params = SearchParameters::create(n, eta);
      const RegisterLayout layout(params);
      for (const auto& pred : all_predicates(n)) {
        std::vector<testing::Complex> signed_uniform(n);
        for (Item x = 1; x <= n; ++x) signed_uniform[x - 1] = pred.marked(x) ? -1.0 : 1.0;
        const auto one = testing::apply(d, signed_uniform);
        std::vector<Amplitude> expected(std::size_t{1} << layout.total_qubits(), 0.0);
        for (std::uint64_t samples = 0; samples < (std::uint64_t{1} << (nu * eta)); ++samples) {
          Amplitude a = 1.0;
          for (std::size_t r = 1; r <= eta; ++r) a *= one[register_value(samples, r, nu)];
          expected[samples] = a;
          expected[samples | (std::uint64_t{1} << layout.ancilla())] = -a;
        }
        const auto run = run_circuit(params, pred);
        EXPECT_GE(fidelity_mod_phase(run.final_state, StateVector::normalized(expected)),
                  1.0 - kStateTol);
        EXPECT_GE(fidelity_mod_phase(run.final_state,
                                     embed_sample_state(analytic_product_state(
                                                            amplitudes(n, pred.marked_count()),
                                                            pred, eta),
                                                        layout)),
                  1.0 - kStateTol);
      }
    }
  }
}

// k = (3 - 4/4)/2 = 1, l = 0 for N = 4, t = 1.
TEST(RunCircuitTest, CertainSuccessCase) {
  for (Item marked = 1; marked <= 4; ++marked) {
    const auto params = SearchParameters::create(4, 1);
    const auto run = run_circuit(params, BooleanPredicate::from_marks(4, std::vector<Item>{marked}));
    const auto marginal = run.final_state.marginal_distribution(RegisterLayout(params).sample_register(1));
    for (std::size_t v = 0; v < 4; ++v) EXPECT_NEAR(marginal[v], v + 1 == marked ? 1.0 : 0.0, 1e-12);
  }
}

// The joint distribution of the sample registers is the product of the
// per-register marginals, so sampling registers independently is exact.
TEST(MeasureSamplesTest, JointEqualsProductOfMarginals) {
  for (auto [n, eta] : {std::pair<std::size_t, std::size_t>{2, 3}, {4, 2}}) {
    const auto params = SearchParameters::create(n, eta);
    const RegisterLayout layout(params);
    for (const auto& pred : all_predicates(n)) {
      const auto run = run_circuit(params, pred);
      std::vector<int> all_samples;
      for (std::size_t q = 0; q < layout.sample_qubit_count(); ++q) all_samples.push_back(static_cast<int>(q));
      const auto joint = run.final_state.marginal_distribution(all_samples);
      const auto marginals = sample_register_marginals(run.final_state, layout);
      for (std::uint64_t pattern = 0; pattern < joint.size(); ++pattern) {
        double product = 1.0;
        for (std::size_t r = 1; r <= eta; ++r) product *= marginals[r - 1][register_value(pattern, r, params.nu())];
        EXPECT_NEAR(joint[pattern], product, 1e-12);
      }
    }
  }
}

TEST(MeasureSamplesTest, DeterministicInSeed) {
  const auto params = SearchParameters::create(4, 3);
  const auto run = run_circuit(params, BooleanPredicate::from_marks(4, std::vector<Item>{1, 2}));
  const RegisterLayout layout(params);
  EXPECT_EQ(measure_samples(run.final_state, layout, 99), measure_samples(run.final_state, layout, 99));
}

TEST(MeasureSamplesTest, CertainSuccessAlwaysMarked) {
  const auto params = SearchParameters::create(4, 3);
  const auto run = run_circuit(params, BooleanPredicate::from_marks(4, std::vector<Item>{2}));
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    EXPECT_EQ(measure_samples(run.final_state, RegisterLayout(params), seed).values,
              (std::vector<Item>{2, 2, 2}));
  }
}

// N = 2, t = 1: k^2 = l^2 = 1/2. 100 seeded runs of 10 registers give 1000
// draws; the marked count must lie within 3 sqrt(1000/4) of 500.
TEST(MeasureSamplesTest, BalancedCaseFrequency) {
  const auto params = SearchParameters::create(2, 10);
  const auto run = run_circuit(params, BooleanPredicate::from_marks(2, std::vector<Item>{1}));
  std::size_t marked = 0, total = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    for (Item x : measure_samples(run.final_state, RegisterLayout(params), seed).values) {
      marked += x == 1;
      ++total;
    }
  }
  ASSERT_EQ(total, 1000u);
  EXPECT_LE(std::abs(static_cast<double>(marked) - 500.0), 3.0 * std::sqrt(1000.0 / 4.0));
}

TEST(MajorityTest, Examples) {
  const auto pred = BooleanPredicate::from_marks(4, std::vector<Item>{3});
  auto o = majority_postprocess(SampleTuple{{3, 3, 1}}, pred);
  EXPECT_EQ(o.winner, 3u);
  EXPECT_FALSE(o.tie_detected);
  EXPECT_TRUE(o.winner_satisfies);
  EXPECT_EQ(o.frequencies.at(3), 2u);
  EXPECT_EQ(o.frequencies.at(1), 1u);

  o = majority_postprocess(SampleTuple{{1, 2}}, pred, {TieBreakPolicy::kLowestIndex, 0});
  EXPECT_EQ(o.winner, 1u);
  EXPECT_TRUE(o.tie_detected);
  EXPECT_FALSE(o.winner_satisfies);

  o = majority_postprocess(SampleTuple{{2, 2, 2}}, pred);
  EXPECT_EQ(o.winner, 2u);

  EXPECT_THROW(majority_postprocess(SampleTuple{}, pred), DomainError);
  EXPECT_THROW(majority_postprocess(SampleTuple{{5}}, pred), DomainError);
}

TEST(MajorityTest, RandomTieBreakPicksAmongMaxima) {
  const auto pred = BooleanPredicate::first_marked(4, 0);
  std::set<Item> winners;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    const auto o = majority_postprocess(SampleTuple{{4, 2, 4, 2, 1}}, pred, {TieBreakPolicy::kRandom, seed});
    EXPECT_TRUE(o.winner == 2 || o.winner == 4);
    EXPECT_TRUE(o.tie_detected);
    winners.insert(o.winner);
    EXPECT_EQ(o.winner, majority_postprocess(SampleTuple{{4, 2, 4, 2, 1}}, pred,
                                             {TieBreakPolicy::kRandom, seed}).winner);
  }
  EXPECT_EQ(winners.size(), 2u);
}

TEST(MajorityTest, FrequenciesSumToEtaAndWinnerIsMaximal) {
  std::mt19937_64 rng(77);
  const auto pred = BooleanPredicate::first_marked(8, 3);
  for (int round = 0; round < 200; ++round) {
    SampleTuple s;
    for (std::size_t i = 0, len = 1 + rng() % 12; i < len; ++i) s.values.push_back(1 + rng() % 8);
    const auto o = majority_postprocess(s, pred, {TieBreakPolicy::kRandom, rng()});
    std::size_t total = 0, best = 0;
    for (const auto& [item, count] : o.frequencies) {
      total += count;
      best = std::max(best, count);
    }
    EXPECT_EQ(total, s.size());
    EXPECT_EQ(o.frequencies.at(o.winner), best);
  }
}

TEST(RunSearchTest, Examples) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto o = run_search(SearchParameters::create(4, 3),
                              BooleanPredicate::from_marks(4, std::vector<Item>{3}), {seed});
    EXPECT_EQ(o.winner, 3u);
    EXPECT_TRUE(o.winner_satisfies);
  }
  EXPECT_FALSE(run_search(SearchParameters::create(2, 5), BooleanPredicate::first_marked(2, 0), {9})
                   .winner_satisfies);
  EXPECT_TRUE(run_search(SearchParameters::create(4, 2), BooleanPredicate::first_marked(4, 4), {1})
                  .winner_satisfies);
}

}  // namespace
}  // namespace cqsearch
