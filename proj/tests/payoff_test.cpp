// Copyright 2026 The belief-ess Authors.
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

#include "belief_ess/payoff.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace belief_ess {
namespace {

using J = BeliefStrategy<double>;
using M = MixedStrategy<double>;

const PureStrategy kH(0);
const PureStrategy kD(1);

// Belief strategy with interval [bel, pl].
J FromInterval(double bel, double pl) { return J(bel, 1 - pl); }

oracle::Payoffs ToOracle(const SymmetricGame2<double>& g) {
  return {{{g(0, 0), g(0, 1)}, {g(1, 0), g(1, 1)}}};
}

SymmetricGame2<double> RandomGame(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  Eigen::Matrix2d m;
  m << u(rng), u(rng), u(rng), u(rng);
  return SymmetricGame2<double>(m);
}

J RandomBelief(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double a = u(rng);
  return J(a, (1 - a) * u(rng));
}

TEST(ExpectedMixedVsMixed, Examples) {
  const auto g = hawk_dove(2.0, 4.0);
  const auto e = oracle::hawk_dove(2, 4);
  // Frozen from oracle::mixed_vs_mixed.
  EXPECT_DOUBLE_EQ(oracle::mixed_vs_mixed(e, 1.0, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(expected_mixed_vs_mixed(g, M(1.0), M(0.5)).value, 0.5);
  EXPECT_DOUBLE_EQ(oracle::mixed_vs_mixed(e, 0.5, 0.5), 0.5);
  EXPECT_DOUBLE_EQ(expected_mixed_vs_mixed(g, M(0.5), M(0.5)).value, 0.5);
  EXPECT_EQ(expected_mixed_vs_mixed(g, M(1.0), M(1.0)).value, g(0, 0));
  EXPECT_EQ(expected_mixed_vs_mixed(g, M(0.0), M(0.0)).value, g(1, 1));
  EXPECT_EQ(expected_mixed_vs_mixed(g, M(0.5), M(0.5)).method,
            PayoffMethod::kClosedForm);
}

TEST(ExpectedPureVsBelief, HawkDoveClosedForms) {
  const auto g = hawk_dove(2.0, 4.0);
  const auto j = FromInterval(0.3, 0.7);
  // V - (V+C)/2 * (Pl+Bel)/2 and V/2 - V/2 * (Pl+Bel)/2.
  EXPECT_NEAR(expected_pure_vs_belief(g, kH, j).value, 0.5, 1e-12);
  EXPECT_NEAR(expected_pure_vs_belief(g, kD, j).value, 0.5, 1e-12);
  EXPECT_FALSE(expected_pure_vs_belief(g, kH, j).std_error.has_value());
}

TEST(ExpectedBeliefVsPure, HawkDoveClosedForms) {
  const auto g = hawk_dove(2.0, 4.0);
  const auto j = FromInterval(0.3, 0.7);
  // (V-C)/2 * V/C and V/2 * V/C + V/2.
  EXPECT_NEAR(expected_belief_vs_pure(g, j, kH).value, -0.5, 1e-12);
  EXPECT_NEAR(expected_belief_vs_pure(g, j, kD).value, 1.5, 1e-12);
  EXPECT_EQ(expected_belief_vs_pure(g, J(1, 0), kD).value, g(0, 1));
}

TEST(ExpectedBeliefVsBelief, Examples) {
  const auto g = hawk_dove(2.0, 4.0);
  const J ess(0.3, 0.3);
  EXPECT_NEAR(expected_belief_vs_belief(g, ess, ess).value, 0.5, 1e-12);
  EXPECT_NEAR(expected_belief_vs_belief(g, ess, J(1, 0)).value,
              expected_belief_vs_pure(g, ess, kH).value, 1e-12);
  EXPECT_NEAR(expected_belief_vs_belief(g, ess, J(1, 0)).value, -0.5, 1e-12);
  EXPECT_NEAR(expected_belief_vs_belief(g, J(0.2, 0.8), J(0.7, 0.3)).value,
              expected_mixed_vs_mixed(g, M(0.2), M(0.7)).value, 1e-12);
}

// Closed forms against quadrature of the defining integrals.
TEST(ClosedForms, MatchQuadrature) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto g = RandomGame(rng);
    const auto e = ToOracle(g);
    const auto j = RandomBelief(rng);
    const auto k = RandomBelief(rng);
    const auto ij = belief_interval(j);
    const auto ik = belief_interval(k);
    for (int s = 0; s < 2; ++s) {
      EXPECT_NEAR(expected_pure_vs_belief(g, PureStrategy(s), j).value,
                  oracle::pure_vs_interval(e, s, ij.lower, ij.upper), 1e-10);
      EXPECT_NEAR(expected_belief_vs_pure(g, j, PureStrategy(s)).value,
                  oracle::interval_vs_pure(e, ij.lower, ij.upper, s), 1e-10);
    }
    EXPECT_NEAR(expected_belief_vs_belief(g, j, k).value,
                oracle::interval_vs_interval(e, ij.lower, ij.upper, ik.lower,
                                             ik.upper),
                1e-10);
  }
}

TEST(ClosedForms, ReductionLaw) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const auto g = RandomGame(rng);
    const double p = u(rng);
    const J j(p, 1 - p);
    for (int s = 0; s < 2; ++s) {
      EXPECT_NEAR(expected_pure_vs_belief(g, PureStrategy(s), j).value,
                  expected_mixed_vs_mixed(g, M(1.0 - s), M(p)).value, 1e-12);
    }
  }
}

TEST(ClosedForms, MidpointLaw) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const auto g = RandomGame(rng);
    const double mid = u(rng);
    const double w1 = std::min(mid, 1 - mid) * u(rng);
    const double w2 = std::min(mid, 1 - mid) * u(rng);
    const auto j1 = FromInterval(mid - w1, mid + w1);
    const auto j2 = FromInterval(mid - w2, mid + w2);
    for (int s = 0; s < 2; ++s) {
      EXPECT_NEAR(expected_pure_vs_belief(g, PureStrategy(s), j1).value,
                  expected_pure_vs_belief(g, PureStrategy(s), j2).value, 1e-12);
    }
  }
}

TEST(ClosedForms, LinearInPayoffs) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 200; ++i) {
    const auto g = RandomGame(rng);
    const double k = std::uniform_real_distribution<double>(-3, 3)(rng);
    const SymmetricGame2<double> scaled(g.payoffs() * k);
    const auto j = RandomBelief(rng);
    const auto l = RandomBelief(rng);
    EXPECT_NEAR(expected_belief_vs_belief(scaled, j, l).value,
                k * expected_belief_vs_belief(g, j, l).value, 1e-12);
    EXPECT_NEAR(expected_pure_vs_belief(scaled, kD, j).value,
                k * expected_pure_vs_belief(g, kD, j).value, 1e-12);
    EXPECT_NEAR(expected_belief_vs_pure(scaled, j, kH).value,
                k * expected_belief_vs_pure(g, j, kH).value, 1e-12);
  }
}

TEST(ExpectedPayoff, DispatchMatchesDedicatedForms) {
  const auto g = hawk_dove(2.0, 4.0);
  const Strategy<double> h = kH;
  const Strategy<double> j = J(0.3, 0.3);
  const Strategy<double> m = M(0.25);
  EXPECT_EQ(expected_payoff(g, h, h), -1.0);
  EXPECT_NEAR(expected_payoff(g, h, j), 0.5, 1e-12);
  EXPECT_NEAR(expected_payoff(g, j, h), -0.5, 1e-12);
  EXPECT_NEAR(expected_payoff(g, m, j),
              oracle::mixed_vs_mixed(oracle::hawk_dove(2, 4), 0.25, 0.5), 1e-12);
  EXPECT_NEAR(expected_payoff(g, m, m),
              oracle::mixed_vs_mixed(oracle::hawk_dove(2, 4), 0.25, 0.25), 1e-12);
}

TEST(MonteCarlo, DeterministicOutcome) {
  const auto g = hawk_dove(2.0, 4.0);
  for (std::uint64_t n : {1ULL, 17ULL, 1000ULL}) {
    const auto r = mc_expected_payoff(g, J(1, 0), J(0, 1), n, 99);
    EXPECT_EQ(r.value, 2.0);
    ASSERT_TRUE(r.std_error.has_value());
    EXPECT_EQ(*r.std_error, 0.0);
    EXPECT_EQ(r.method, PayoffMethod::kMonteCarlo);
  }
}

TEST(MonteCarlo, ZeroSamples) {
  try {
    mc_expected_payoff(hawk_dove(2.0, 4.0), J(1, 0), J(0, 1), 0, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kZeroSamples);
  }
}

TEST(MonteCarlo, PureVsIntervalWithinThreeStandardErrors) {
  const auto g = hawk_dove(2.0, 4.0);
  const auto r = mc_expected_payoff(g, J(1, 0), FromInterval(0.3, 0.7),
                                    1000000, 2026);
  EXPECT_LE(std::abs(r.value - 0.5), 3 * *r.std_error);
}

TEST(MonteCarlo, BeliefVsBeliefWithinThreeStandardErrors) {
  const auto g = hawk_dove(2.0, 4.0);
  const J ess(0.3, 0.3);  // delta = 0.2
  const auto r = mc_expected_payoff(g, ess, ess, 1000000, 31337);
  EXPECT_LE(std::abs(r.value - 0.5), 3 * *r.std_error);
}

TEST(MonteCarlo, ReproducibleForFixedSeedAndWorkers) {
  const auto g = hawk_dove(2.0, 4.0);
  const J j(0.1, 0.4);
  const auto a = mc_expected_payoff(g, j, j, 20000, 5, 3);
  const auto b = mc_expected_payoff(g, j, j, 20000, 5, 3);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(*a.std_error, *b.std_error);
  const auto c = mc_expected_payoff(g, j, j, 20000, 6, 3);
  EXPECT_NE(a.value, c.value);
}

TEST(MonteCarlo, WorkersPartitionAllTrials) {
  const auto g = hawk_dove(2.0, 4.0);
  // Deterministic strategies: every partition must give the exact value.
  for (unsigned w : {1u, 2u, 3u, 7u}) {
    const auto r = mc_expected_payoff(g, J(0, 1), J(0, 1), 10, 1, w);
    EXPECT_EQ(r.value, 1.0);
    EXPECT_EQ(*r.std_error, 0.0);
  }
  // Single-worker run uses substream 0 of the same seed.
  const J j(0.2, 0.3);
  EXPECT_EQ(mc_expected_payoff(g, j, j, 5000, 77, 1).value,
            mc_expected_payoff(g, j, j, 5000, 77).value);
}

// Oracle agreement over random instances: at most one miss in 100.
TEST(MonteCarlo, OracleAgreementOnRandomInstances) {
  std::mt19937_64 rng(123);
  int within = 0;
  for (int i = 0; i < 100; ++i) {
    const auto g = RandomGame(rng);
    const auto j = RandomBelief(rng);
    const auto k = RandomBelief(rng);
    const double exact = expected_belief_vs_belief(g, j, k).value;
    const auto r = mc_expected_payoff(g, j, k, 1000000, 1000 + i);
    if (std::abs(r.value - exact) <= 4 * *r.std_error) ++within;
  }
  EXPECT_GE(within, 99);
}

}  // namespace
}  // namespace belief_ess
