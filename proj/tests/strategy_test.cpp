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

#include "belief_ess/strategy.hpp"

#include <random>

#include <gtest/gtest.h>

namespace belief_ess {
namespace {

const FrameOfDiscernment kHD{"H", "D"};

TEST(BeliefInterval, Examples) {
  auto iv = belief_interval(BeliefStrategy<double>(0.3, 0.2));
  EXPECT_DOUBLE_EQ(iv.lower, 0.3);
  EXPECT_DOUBLE_EQ(iv.upper, 0.8);
  iv = belief_interval(BeliefStrategy<double>(0.5, 0.5));
  EXPECT_EQ(iv.lower, 0.5);
  EXPECT_EQ(iv.upper, 0.5);
  iv = belief_interval(BeliefStrategy<double>(0.0, 0.0));
  EXPECT_EQ(iv.lower, 0.0);
  EXPECT_EQ(iv.upper, 1.0);
}

TEST(BeliefStrategy, Validation) {
  EXPECT_THROW(BeliefStrategy<double>(-0.1, 0.5), Error);
  EXPECT_THROW(BeliefStrategy<double>(0.6, 0.5), Error);
  EXPECT_NO_THROW(BeliefStrategy<double>(0.5, 0.5 + 1e-13));
  EXPECT_THROW(MixedStrategy<double>(1.5), Error);
  EXPECT_THROW(PureStrategy(2), Error);
}

TEST(FromMixed, Embeddings) {
  auto j = from_mixed(MixedStrategy<double>(0.5));
  EXPECT_EQ(j.a(), 0.5);
  EXPECT_EQ(j.b(), 0.5);
  j = from_mixed(MixedStrategy<double>(1.0));
  EXPECT_EQ(j.a(), 1.0);
  EXPECT_EQ(j.b(), 0.0);
  j = from_mixed(MixedStrategy<double>(0.0));
  EXPECT_EQ(j.a(), 0.0);
  EXPECT_EQ(j.b(), 1.0);
}

TEST(ToMixed, DegenerateAndNot) {
  auto p = to_mixed(BeliefStrategy<double>(0.5, 0.5));
  ASSERT_TRUE(p);
  EXPECT_EQ(p->p(), 0.5);
  EXPECT_FALSE(to_mixed(BeliefStrategy<double>(0.3, 0.2)));
  p = to_mixed(BeliefStrategy<double>(1.0, 0.0));
  ASSERT_TRUE(p);
  EXPECT_EQ(p->p(), 1.0);
}

TEST(ToMixed, RoundTripIsExact) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    const MixedStrategy<double> m(u(rng));
    const auto back = to_mixed(from_mixed(m));
    ASSERT_TRUE(back);
    EXPECT_EQ(back->p(), m.p());
  }
  for (double p : {0.0, 1.0}) {
    EXPECT_EQ(to_mixed(from_mixed(MixedStrategy<double>(p)))->p(), p);
  }
}

TEST(AsMassFunction, Examples) {
  auto m = as_mass_function(BeliefStrategy<double>(0.3, 0.2), kHD);
  EXPECT_DOUBLE_EQ(m.mass(kHD.subset({"H"})), 0.3);
  EXPECT_DOUBLE_EQ(m.mass(kHD.subset({"D"})), 0.2);
  EXPECT_DOUBLE_EQ(m.mass(kHD.full()), 0.5);

  m = as_mass_function(BeliefStrategy<double>(1.0, 0.0), kHD);
  EXPECT_EQ(m.masses().size(), 1u);
  EXPECT_EQ(m.mass(kHD.subset({"H"})), 1.0);

  m = as_mass_function(BeliefStrategy<double>(0.0, 0.0), kHD);
  EXPECT_EQ(m.masses().size(), 1u);
  EXPECT_EQ(m.mass(kHD.full()), 1.0);
}

TEST(AsMassFunction, WrongFrameSize) {
  try {
    as_mass_function(BeliefStrategy<double>(0.3, 0.2),
                     FrameOfDiscernment{"H", "D", "B"});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kWrongFrameSize);
  }
}

// The interval agrees with Bel/Pl computed on the equivalent mass function,
// and the second strategy's interval is the dual of the first.
TEST(BeliefStrategyProperties, AgreesWithEvidenceCore) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 5000; ++i) {
    const double a = u(rng);
    const double b = (1 - a) * u(rng);
    const BeliefStrategy<double> j(a, b);
    const auto m = as_mass_function(j, kHD);
    const auto iv = belief_interval(j);
    EXPECT_NEAR(iv.lower, belief(m, kHD.subset({"H"})), 1e-12);
    EXPECT_NEAR(iv.upper, plausibility(m, kHD.subset({"H"})), 1e-12);

    const auto iv_d = belief_interval_second(j);
    EXPECT_NEAR(iv_d.lower, belief(m, kHD.subset({"D"})), 1e-12);
    EXPECT_NEAR(iv_d.upper, plausibility(m, kHD.subset({"D"})), 1e-12);
    EXPECT_NEAR(iv_d.lower, 1 - iv.upper, 1e-12);
    EXPECT_NEAR(iv_d.upper, 1 - iv.lower, 1e-12);
  }
}

TEST(Strategy, SpecStrings) {
  const std::array<std::string, 2> labels{"H", "D"};
  EXPECT_EQ(to_spec_string<double>(PureStrategy(1), labels), "pure=D");
  EXPECT_EQ(to_spec_string<double>(MixedStrategy<double>(0.25), labels),
            "mixed=0.25");
  EXPECT_EQ(to_spec_string<double>(BeliefStrategy<double>(0.3, 0.2), labels),
            "belief=0.3,0.2");
}

TEST(Strategy, MidpointsAndWeights) {
  EXPECT_EQ(midpoint<double>(PureStrategy(0)), 1.0);
  EXPECT_EQ(midpoint<double>(PureStrategy(1)), 0.0);
  EXPECT_DOUBLE_EQ(midpoint<double>(BeliefStrategy<double>(0.3, 0.3)), 0.5);
  const auto w = weights<double>(MixedStrategy<double>(0.2));
  EXPECT_DOUBLE_EQ(w(0), 0.2);
  EXPECT_DOUBLE_EQ(w(1), 0.8);
}

}  // namespace
}  // namespace belief_ess
