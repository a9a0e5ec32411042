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

#include <stdexcept>

#include "coregame/coalition.hpp"
#include "coregame/error.hpp"
#include "coregame/exact.hpp"
#include "support/oracles.hpp"

namespace coregame {
namespace {

TEST(RationalTest, ParsesFractionsIntegersAndDecimals) {
  EXPECT_EQ(Rational::parse("3/6"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-4"), Rational(-4));
  EXPECT_EQ(Rational::parse("1.25"), Rational(5, 4));
  EXPECT_EQ(Rational::parse("-0.5"), Rational(-1, 2));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(RationalTest, StaysInLowestTerms) {
  const Rational r = Rational(6, -8);
  EXPECT_EQ(r.numerator_string(), "-3");
  EXPECT_EQ(r.denominator_string(), "4");
  EXPECT_EQ(r.to_string(), "-3/4");
  EXPECT_EQ((Rational(1, 3) + Rational(2, 3)).to_string(), "1");
}

TEST(RationalTest, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(RationalTest, ArithmeticMatchesCrossMultiplication) {
  testing::Rng rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int a = rng.uniform(-20, 20), b = rng.uniform(1, 9);
    const int c = rng.uniform(-20, 20), d = rng.uniform(1, 9);
    const Rational x(a, b), y(c, d);
    EXPECT_EQ(x + y, Rational(a * d + c * b, b * d));
    EXPECT_EQ(x * y, Rational(a * c, b * d));
    EXPECT_EQ(x < y, a * d < c * b);
    if (c != 0) EXPECT_EQ((x / y) * y, x);
  }
}

TEST(ExactTest, GaussSolveRecoversSolution) {
  testing::Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.uniform(1, 5);
    RatMatrix m(n, n);
    RatVector x(n);
    for (int i = 0; i < n; ++i) {
      x(i) = rng.rational(-5, 5);
      for (int j = 0; j < n; ++j) m(i, j) = rng.rational(-3, 3);
    }
    const RatVector rhs = m * x;
    const auto solved = gauss_solve(m, rhs);
    if (rank(m) == n) {
      ASSERT_TRUE(solved.has_value());
      EXPECT_EQ(*solved, x);
    }
  }
}

TEST(ExactTest, SingularSystemHasNoUniqueSolution) {
  RatMatrix m(2, 2);
  m << 1, 2, 2, 4;
  EXPECT_FALSE(inverse(m).has_value());
  EXPECT_EQ(rank(m), 1);
}

TEST(ExactTest, LeftPseudoInverseIsLeftInverse) {
  testing::Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int rows = rng.uniform(2, 5);
    const int cols = rng.uniform(1, rows);
    RatMatrix q(rows, cols);
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) q(i, j) = rng.uniform(0, 2);
    }
    if (rank(q) < cols) {
      EXPECT_THROW(left_pseudo_inverse(q), Error);
      continue;
    }
    EXPECT_EQ(RatMatrix(left_pseudo_inverse(q) * q), identity(cols));
  }
}

TEST(ExactTest, ShapePredicates) {
  RatMatrix a(2, 2);
  a << 1, 0, 0, 1;
  EXPECT_TRUE(is_binary(a));
  EXPECT_TRUE(is_symmetric(a));
  a(0, 1) = Rational(1, 2);
  EXPECT_FALSE(is_binary(a));
  EXPECT_FALSE(is_symmetric(a));
  EXPECT_EQ(to_string(RatVector(unit(3, 1))), "(0, 1, 0)");
}

TEST(CoalitionTest, ParsesPlayerZeroFirst) {
  const Coalition c = Coalition::parse("1010");
  EXPECT_EQ(c.players(), 4);
  EXPECT_TRUE(c.contains(0));
  EXPECT_FALSE(c.contains(1));
  EXPECT_TRUE(c.contains(2));
  EXPECT_EQ(c.size(), 2);
  EXPECT_EQ(c.to_string(), "1010");
  EXPECT_TRUE(Coalition::grand(3).is_grand());
  EXPECT_TRUE(c.subset_of(Coalition::grand(4)));
  EXPECT_EQ(coalition_count(5), 32U);
  EXPECT_THROW(Coalition::parse("10x"), Error);
}

TEST(CoalitionTest, VectorRoundTrip) {
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    const Coalition c(4, mask);
    EXPECT_EQ(Coalition::from_vector(c.to_vector()), c);
  }
  RatVector bad(2);
  bad << 1, 2;
  EXPECT_THROW(Coalition::from_vector(bad), Error);
}

}  // namespace
}  // namespace coregame
