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

#include "coregame/error.hpp"
#include "coregame/game.hpp"
#include "support/oracles.hpp"

namespace coregame {
namespace {

using testing::Rng;

RatMatrix four_cycle_a() {
  RatMatrix a(4, 4);
  a << 1, 1, 0, 0,
       0, 0, 1, 1,
       1, 0, 1, 0,
       0, 1, 0, 1;
  return a;
}

GameInstance four_player_game(bool all_pairs) {
  RatMatrix q = RatMatrix::Zero(4, 4);
  const std::vector<std::pair<int, int>> pairs =
      all_pairs ? std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 3}, {1, 2}}
                : std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  for (const auto& [i, j] : pairs) q(i, j) = q(j, i) = Rational(-1, 2);
  return GameInstance(four_cycle_a(), GameSense::kPacking, boolean_domain(4),
                      Objective::quadratic(ones(4), q));
}

// The number of "cross" rows (3 and 4) in w decides most values.
Rational expected_value(std::uint64_t w, bool all_pairs) {
  const int size = std::popcount(w);
  if (size <= 1 || w == 0b0011 || w == 0b1100) return 0;
  if (size == 4) return all_pairs ? 1 : 2;
  return 1;
}

TEST(GameTest, FourPlayerValueTables) {
  for (const bool all_pairs : {false, true}) {
    const GameInstance g = four_player_game(all_pairs);
    const auto values = nu_all(g);
    ASSERT_EQ(values.size(), 16U);
    for (std::uint64_t w = 0; w < 16; ++w) {
      ASSERT_TRUE(values[w].has_value());
      EXPECT_EQ(*values[w], expected_value(w, all_pairs)) << "w=" << w;
    }
    EXPECT_EQ(anchor_value(g, Coalition::grand(4)), Rational(2));
  }
}

TEST(GameTest, RelaxationOfFourPlayerGame) {
  EXPECT_EQ(relaxation(four_player_game(false)).coeffs, ones(4));
  EXPECT_EQ(theorem_variant(four_player_game(false)), TheoremVariant::kPacking);
  EXPECT_TRUE(validate(four_player_game(true)).ok());
}

TEST(GameTest, ZeroColumnIsRejected) {
  RatMatrix a(2, 2);
  a << 1, 0, 0, 0;
  const GameInstance g(a, GameSense::kPacking, boolean_domain(2), Objective::linear(ones(2)));
  EXPECT_FALSE(validate(g).ok());
  try {
    require_valid(g);
    FAIL() << "zero column accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kAssumptionViolated);
  }
}

TEST(GameTest, PositiveInteractionFailsValidation) {
  RatMatrix q = RatMatrix::Zero(2, 2);
  q(0, 1) = q(1, 0) = 1;
  const GameInstance g(identity(2), GameSense::kPacking, boolean_domain(2),
                       Objective::quadratic(ones(2), q));
  EXPECT_FALSE(validate(g).ok());
}

TEST(GameTest, PartitionInfeasibleCoalition) {
  // x1 must equal 1 while x1 + x2 must equal 0.
  RatMatrix a(2, 2);
  a << 1, 0, 1, 1;
  const GameInstance g(a, GameSense::kPartition, boolean_domain(2), Objective::linear(ones(2)));
  const Coalition w(2, 0b01);
  EXPECT_FALSE(try_nu(g, w).has_value());
  try {
    nu(g, w);
    FAIL() << "infeasible sub-program returned a value";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInfeasibleSubprogram);
  }
  EXPECT_EQ(nu(g, Coalition::grand(2)), Rational(1));
}

TEST(GameTest, CoveringUsesMinimum) {
  RatMatrix a(2, 3);
  a << 1, 1, 0,
       0, 1, 1;
  const GameInstance g(a, GameSense::kCovering, boolean_domain(3),
                       Objective::linear(from_std({2, 3, 2})));
  EXPECT_EQ(theorem_variant(g), TheoremVariant::kCovering);
  EXPECT_EQ(nu(g, Coalition(2, 0b01)), Rational(2));
  EXPECT_EQ(nu(g, Coalition::grand(2)), Rational(3));
  EXPECT_EQ(nu(g, Coalition::empty(2)), Rational(0));
  const ValueChain c = value_chain(g, Coalition::grand(2));
  EXPECT_LE(c.anchor, c.upper);
  EXPECT_LE(c.upper, c.original);
}

TEST(GameTest, VariantSelection) {
  RatMatrix q(2, 1);
  q << 1, 1;
  const GameInstance cone(identity(2), GameSense::kPacking,
                          generator_cone(boolean_domain(2), q), Objective::linear(ones(2)));
  EXPECT_EQ(theorem_variant(cone), TheoremVariant::kGenerator);

  const GameInstance scaled(identity(2), GameSense::kPacking, integer_box(2, 2),
                            Objective::linear(ones(2)), Rational(2));
  EXPECT_EQ(theorem_variant(scaled), TheoremVariant::kScaledRhs);
  EXPECT_EQ(payoff_from_dual(scaled, ones(2)), from_std({2, 2}));

  const GameInstance covering_cone(identity(2), GameSense::kCovering,
                                   generator_cone(boolean_domain(2), q),
                                   Objective::linear(ones(2)));
  try {
    theorem_variant(covering_cone);
    FAIL() << "unsupported combination accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidInput);
  }
}

TEST(GameTest, CoalitionIndexedDomainTakesTheMemberSet) {
  // X(w) holds only the basis points of players in w.
  std::map<Coalition, DomainPtr> family;
  for (std::uint64_t w = 0; w < 4; ++w) {
    std::vector<RatVector> points{zeros(2)};
    for (int i = 0; i < 2; ++i) {
      if ((w >> i) & 1U) points.push_back(unit(2, i));
    }
    if (w == 3) points.push_back(ones(2));
    family[Coalition(2, w)] = std::make_shared<DomainSpec>(explicit_finite(2, points));
  }
  const GameInstance g(identity(2), GameSense::kPacking, coalition_indexed(2, family),
                       Objective::linear(from_std({1, 2})));
  EXPECT_EQ(theorem_variant(g), TheoremVariant::kIndexedDomain);
  EXPECT_EQ(nu(g, Coalition(2, 0b10)), Rational(2));
  EXPECT_EQ(nu(g, Coalition::grand(2)), Rational(3));
}

struct RandomPacking {
  RatMatrix a;
  RatVector b;
  RatMatrix q;
};

RandomPacking draw_packing(Rng& rng, int n, int m) {
  RandomPacking p{testing::random_binary(rng, n, m), RatVector(m), testing::random_submodular_q(rng, m)};
  for (int j = 0; j < m; ++j) p.b(j) = rng.rational(0, 4);
  return p;
}

TEST(GameProperty, ValuesMatchBruteForce) {
  Rng rng(101);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.uniform(1, 4);
    const int m = rng.uniform(1, 5);
    const RandomPacking p = draw_packing(rng, n, m);
    const GameInstance g(p.a, GameSense::kPacking, boolean_domain(m), Objective::quadratic(p.b, p.q));
    const auto values = nu_all(g);
    for (std::uint64_t w = 0; w < values.size(); ++w) {
      const Rational expect = testing::packing_value(
          p.a, w, [&](const RatVector& x) { return testing::quadratic_value(p.b, p.q, x); });
      ASSERT_TRUE(values[w].has_value());
      EXPECT_EQ(*values[w], expect);
      EXPECT_EQ(try_nu(g, Coalition(n, w)), values[w]);
    }
  }
}

TEST(GameProperty, ChainIsOrdered) {
  Rng rng(103);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = rng.uniform(1, 4);
    const int m = rng.uniform(1, 5);
    const RandomPacking p = draw_packing(rng, n, m);
    const GameInstance g(p.a, GameSense::kPacking, boolean_domain(m), Objective::quadratic(p.b, p.q));
    const Coalition grand = Coalition::grand(n);
    const ValueChain c = value_chain(g, grand);
    EXPECT_GE(c.anchor, c.upper);
    EXPECT_GE(c.upper, c.original);
    if (c.lower) EXPECT_GE(c.original, *c.lower);
    EXPECT_EQ(c.original, nu(g, grand));
    // Independent anchor: vertex enumeration of max Fᵀx, Ax ≤ 1, x ≥ 0.
    const auto oracle = testing::vertex_lp_max(p.a, ones(n), p.b);
    ASSERT_TRUE(oracle.has_value());
    EXPECT_EQ(c.anchor, *oracle);
  }
}

TEST(GameProperty, OptimizersAttainTheValue) {
  Rng rng(107);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform(1, 3);
    const int m = rng.uniform(1, 4);
    const RandomPacking p = draw_packing(rng, n, m);
    const GameInstance g(p.a, GameSense::kPacking, boolean_domain(m), Objective::quadratic(p.b, p.q));
    const Coalition w = Coalition::grand(n);
    const Rational v = nu(g, w);
    for (const RatVector& x : nu_optimizers(g, w)) {
      EXPECT_EQ(testing::quadratic_value(p.b, p.q, x), v);
      const RatVector ax = p.a * x;
      for (Eigen::Index i = 0; i < ax.size(); ++i) EXPECT_LE(ax(i), Rational(1));
    }
  }
}

}  // namespace
}  // namespace coregame
