// Copyright 2026 The Coregame Authors
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
#include <gtest/gtest.h>

#include <vector>

#include "coregame/analysis.hpp"
#include "coregame/error.hpp"
#include "support/oracles.hpp"

namespace coregame {
namespace {

using testing::Rng;

GameInstance four_player_game(bool all_pairs) {
  RatMatrix a(4, 4);
  a << 1, 1, 0, 0,
       0, 0, 1, 1,
       1, 0, 1, 0,
       0, 1, 0, 1;
  RatMatrix q = RatMatrix::Zero(4, 4);
  std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  if (all_pairs) pairs.insert(pairs.end(), {{0, 3}, {1, 2}});
  for (const auto& [i, j] : pairs) q(i, j) = q(j, i) = Rational(-1, 2);
  return GameInstance(a, GameSense::kPacking, boolean_domain(4), Objective::quadratic(ones(4), q));
}

GameInstance two_player_game() {
  RatMatrix q(2, 2);
  q << 0, -1, -1, 0;
  return GameInstance(identity(2), GameSense::kPacking, boolean_domain(2),
                      Objective::quadratic(ones(2), q));
}

using testing::balanced_minimum;
using testing::in_core;

TEST(AnalysisTest, NonemptyFourPlayerCore) {
  const GameInstance g = four_player_game(false);
  const CoreReport r = core_nonempty(g);
  EXPECT_TRUE(r.nonempty);
  EXPECT_EQ(r.nu_grand, Rational(2));
  EXPECT_EQ(r.anchor_grand, Rational(2));
  ASSERT_TRUE(r.member.has_value());
  EXPECT_TRUE(is_core_member(g, *r.member));
  EXPECT_TRUE(brute_force_membership(g, *r.member).member);
  const RatVector half = RatVector::Constant(4, Rational(1, 2));
  EXPECT_TRUE(is_core_member(g, half));
  EXPECT_TRUE(brute_force_membership(g, half).member);
  EXPECT_FALSE(is_core_member(g, from_std({2, 0, 0, 0})));
}

TEST(AnalysisTest, EmptyFourPlayerCore) {
  const GameInstance g = four_player_game(true);
  const CoreReport r = core_nonempty(g);
  EXPECT_FALSE(r.nonempty);
  EXPECT_EQ(r.nu_grand, Rational(1));
  EXPECT_EQ(r.anchor_grand, Rational(2));
  EXPECT_FALSE(r.member.has_value());
  const SuperadditivityReport s = superadditivity_probe(g);
  EXPECT_FALSE(s.superadditive);
  ASSERT_TRUE(s.first && s.second);
  EXPECT_TRUE((*s.first | *s.second).is_grand());
  EXPECT_EQ((*s.first & *s.second).mask(), 0U);
  const EquivalenceReport e = equivalence_check(g);
  EXPECT_EQ(e.chain.anchor, Rational(2));
  EXPECT_EQ(e.chain.upper, Rational(2));
  EXPECT_EQ(e.chain.original, Rational(1));
  EXPECT_EQ(e.chain.lower, Rational(1));
  EXPECT_FALSE(e.original_test);
  EXPECT_FALSE(e.upper_test);
  EXPECT_FALSE(e.lower_test);
  EXPECT_TRUE(e.consistent);
  EXPECT_FALSE(bondareva_oracle(g).nonempty);
}

TEST(AnalysisTest, IntegralRelaxationWithEmptyCore) {
  const GameInstance g = two_player_game();
  const IntegralityReport r = integrality_check(g);
  EXPECT_TRUE(r.relax_has_integer_optimum);
  ASSERT_TRUE(r.integer_optimum.has_value());
  EXPECT_EQ(*r.integer_optimum, ones(2));
  EXPECT_FALSE(r.core_nonempty);
  const EquivalenceReport e = equivalence_check(g);
  EXPECT_TRUE(e.upper_equals_anchor);
  EXPECT_FALSE(e.argmax_extension);
  EXPECT_FALSE(e.upper_test);
  EXPECT_TRUE(e.consistent);
  const GammaReport gr = gamma_analysis(g);
  EXPECT_EQ(gr.gamma_min, Rational(2));
  EXPECT_TRUE(in_gamma_core(g, Rational(2), gr.member));
  EXPECT_FALSE(in_gamma_core(g, Rational(3, 2), gr.member));
}

TEST(AnalysisTest, GammaRejectsNonpositiveGrandValue) {
  const GameInstance g(identity(2), GameSense::kPacking, boolean_domain(2),
                       Objective::linear(zeros(2)));
  try {
    gamma_analysis(g);
    FAIL() << "zero grand value accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kZeroGrandValue);
  }
}

TEST(AnalysisTest, CoveringCoreIsReversed) {
  RatMatrix a(2, 3);
  a << 1, 1, 0,
       0, 1, 1;
  const GameInstance g(a, GameSense::kCovering, boolean_domain(3),
                       Objective::linear(from_std({2, 2, 2})));
  const CoreReport r = core_nonempty(g);
  ASSERT_TRUE(r.nonempty);
  ASSERT_TRUE(r.member.has_value());
  std::vector<Rational> values;
  for (const auto& v : nu_all(g)) values.push_back(*v);
  EXPECT_TRUE(in_core(values, *r.member, true));
  EXPECT_TRUE(brute_force_membership(g, *r.member).member);
  EXPECT_TRUE(bondareva_oracle(g).nonempty);
}

TEST(AnalysisTest, OddCycleCoveringCoreIsEmpty) {
  // Pairs cost 2, so y sums to at most 3 while covering everything costs 4.
  RatMatrix a(3, 3);
  a << 1, 1, 0,
       0, 1, 1,
       1, 0, 1;
  const GameInstance g(a, GameSense::kCovering, boolean_domain(3),
                       Objective::linear(from_std({2, 2, 2})));
  const CoreReport r = core_nonempty(g);
  EXPECT_FALSE(r.nonempty);
  EXPECT_EQ(r.nu_grand, Rational(4));
  EXPECT_EQ(r.anchor_grand, Rational(3));
  EXPECT_FALSE(bondareva_oracle(g).nonempty);
}

TEST(AnalysisTest, ScaledRightHandSideMember) {
  // Two players, x ∈ {0,1,2}^2 with x ≤ 2w and f = x1 + x2 - x1x2/2.
  RatMatrix q(2, 2);
  q << 0, Rational(-1, 4), Rational(-1, 4), 0;
  const GameInstance g(identity(2), GameSense::kPacking, integer_box(2, 2),
                       Objective::quadratic(ones(2), q), Rational(2));
  const CoreReport r = core_nonempty(g);
  std::vector<Rational> values;
  for (const auto& v : nu_all(g)) values.push_back(*v);
  EXPECT_EQ(r.nonempty, bondareva_oracle(g).nonempty);
  if (r.member) EXPECT_TRUE(in_core(values, *r.member, false));
}

TEST(AnalysisTest, IdentityGeneratorsMatchStandardPath) {
  Rng rng(211);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform(1, 3);
    const int m = rng.uniform(1, 4);
    const RatMatrix a = testing::random_binary(rng, n, m);
    RatVector b(m);
    for (int j = 0; j < m; ++j) b(j) = rng.rational(0, 3);
    const Objective f = Objective::quadratic(b, testing::random_submodular_q(rng, m));
    const GameInstance plain(a, GameSense::kPacking, boolean_domain(m), f);
    const GameInstance cone(a, GameSense::kPacking, generator_cone(boolean_domain(m), identity(m)), f);
    const CoreReport rp = core_nonempty(plain);
    const CoreReport rc = core_nonempty(cone);
    EXPECT_EQ(rp.nonempty, rc.nonempty);
    EXPECT_EQ(rp.anchor_grand, rc.anchor_grand);
    EXPECT_EQ(rp.nu_grand, rc.nu_grand);
    if (rc.member) EXPECT_TRUE(brute_force_membership(plain, *rc.member).member);
  }
}

TEST(AnalysisProperty, ThreeWayAgreementOnRandomPacking) {
  Rng rng(223);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = rng.uniform(1, 4);
    const int m = rng.uniform(1, 5);
    const RatMatrix a = testing::random_binary(rng, n, m);
    RatVector b(m);
    for (int j = 0; j < m; ++j) b(j) = rng.rational(0, 3);
    const RatMatrix q = testing::random_submodular_q(rng, m);
    const GameInstance g(a, GameSense::kPacking, boolean_domain(m), Objective::quadratic(b, q));
    std::vector<Rational> values;
    for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w) {
      values.push_back(testing::packing_value(
          a, w, [&](const RatVector& x) { return testing::quadratic_value(b, q, x); }));
    }
    const bool oracle = balanced_minimum(values, n) == values.back();
    const CoreReport r = core_nonempty(g);
    const BondarevaReport br = bondareva_oracle(g);
    EXPECT_EQ(r.nonempty, oracle) << "trial " << trial;
    EXPECT_EQ(br.nonempty, oracle) << "trial " << trial;
    EXPECT_EQ(br.lp_value, balanced_minimum(values, n));
    EXPECT_EQ(tbc_value(g, Coalition::grand(n)), br.lp_value);
    if (r.member) EXPECT_TRUE(in_core(values, *r.member, false));
    if (br.member) EXPECT_TRUE(in_core(values, *br.member, false));
    const EquivalenceReport e = equivalence_check(g);
    EXPECT_TRUE(e.consistent);
    EXPECT_EQ(e.original_test, oracle);
  }
}

TEST(AnalysisProperty, GammaMemberCoversEveryCoalition) {
  Rng rng(227);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform(1, 4);
    const int m = rng.uniform(1, 4);
    const RatMatrix a = testing::random_binary(rng, n, m);
    RatVector b(m);
    for (int j = 0; j < m; ++j) b(j) = rng.rational(1, 3);
    const GameInstance g(a, GameSense::kPacking, boolean_domain(m),
                         Objective::quadratic(b, testing::random_submodular_q(rng, m)));
    const GammaReport r = gamma_analysis(g);
    EXPECT_GE(r.gamma_min, Rational(1));
    EXPECT_EQ(r.gamma_min * r.nu_grand, r.anchor_grand);
    EXPECT_TRUE(in_gamma_core(g, r.gamma_min, r.member));
    EXPECT_EQ(in_gamma_core(g, Rational(1), r.member), r.gamma_min == Rational(1));
  }
}

}  // namespace
}  // namespace coregame
