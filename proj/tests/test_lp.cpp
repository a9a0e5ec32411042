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

#include <algorithm>

#include "coregame/error.hpp"
#include "coregame/lp.hpp"
#include "support/oracles.hpp"

namespace coregame {
namespace {

RatMatrix example_matrix() {
  RatMatrix a(4, 4);
  a << 1, 1, 0, 0, 0, 0, 1, 1, 1, 0, 1, 0, 0, 1, 0, 1;
  return a;
}

LpProblem packing_lp(const RatMatrix& a, const RatVector& rhs, const RatVector& c) {
  LpProblem p;
  p.sense = LpSense::kMaximize;
  p.c = c;
  p.a = a;
  p.rhs = rhs;
  p.row_sense.assign(static_cast<std::size_t>(a.rows()), RowSense::kLe);
  return p;
}

TEST(LpTest, FourCycleMatchingRelaxation) {
  const LpProblem p = packing_lp(example_matrix(), ones(4), ones(4));
  const LpSolution s = solve(p);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, Rational(2));
  EXPECT_EQ(testing::share(s.dual, 0xF), Rational(2));
  EXPECT_TRUE(is_dual_optimal(p, s.dual));
  RatVector half = RatVector::Constant(4, Rational(1, 2));
  EXPECT_TRUE(is_dual_optimal(p, half));
  RatVector low = RatVector::Constant(4, Rational(1, 3));
  EXPECT_FALSE(is_dual_feasible(p, low));
}

TEST(LpTest, MinimizationDual) {
  // min y1+y2+y3+y4 s.t. y1+y3 ≥ 1, y1+y4 ≥ 1, y2+y3 ≥ 1, y2+y4 ≥ 1.
  LpProblem p;
  p.sense = LpSense::kMinimize;
  p.c = ones(4);
  p.a = example_matrix().transpose();
  p.rhs = ones(4);
  p.row_sense.assign(4, RowSense::kGe);
  const LpSolution s = solve(p);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, Rational(2));
}

TEST(LpTest, DetectsInfeasibleAndUnbounded) {
  LpProblem p;
  p.c = ones(1);
  p.a = RatMatrix::Constant(1, 1, Rational(1));
  p.rhs = RatVector::Constant(1, Rational(-1));
  p.row_sense = {RowSense::kLe};
  EXPECT_EQ(solve(p).status, LpStatus::kInfeasible);

  p.rhs(0) = 1;
  p.row_sense = {RowSense::kGe};
  EXPECT_EQ(solve(p).status, LpStatus::kUnbounded);
  EXPECT_THROW(is_dual_optimal(p, ones(1)), Error);
}

TEST(LpTest, FreeVariablesAndEqualities) {
  // max x1 - x2, x1 + x2 = 1, x1 - x2 ≤ 3, x2 free: x1 = 2, x2 = -1.
  LpProblem p;
  p.c = RatVector(2);
  p.c << 1, -1;
  p.a = RatMatrix(2, 2);
  p.a << 1, 1, 1, -1;
  p.rhs = RatVector(2);
  p.rhs << 1, 3;
  p.row_sense = {RowSense::kEq, RowSense::kLe};
  p.var_sign = {VarSign::kNonnegative, VarSign::kFree};
  const LpSolution s = solve(p);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, Rational(3));
  EXPECT_EQ(s.primal(0), Rational(2));
  EXPECT_EQ(s.primal(1), Rational(-1));
  EXPECT_TRUE(is_dual_optimal(p, s.dual));
}

TEST(LpTest, RedundantEqualityRows) {
  LpProblem p;
  p.c = ones(2);
  p.a = RatMatrix(3, 2);
  p.a << 1, 1, 2, 2, 1, 0;
  p.rhs = RatVector(3);
  p.rhs << 1, 2, Rational(1, 3);
  p.row_sense = {RowSense::kEq, RowSense::kEq, RowSense::kLe};
  const LpSolution s = solve(p);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.value, Rational(1));
  EXPECT_TRUE(is_dual_optimal(p, s.dual));
}

TEST(LpTest, DimensionMismatchRejected) {
  LpProblem p;
  p.c = ones(3);
  p.a = RatMatrix::Zero(1, 2);
  p.rhs = ones(1);
  p.row_sense = {RowSense::kLe};
  EXPECT_THROW(solve(p), Error);
}

// Random packing LPs against vertex enumeration, plus strong duality.
TEST(LpProperty, AgreesWithVertexEnumeration) {
  testing::Rng rng(2024);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = rng.uniform(1, 4);
    const int m = rng.uniform(1, 4);
    const RatMatrix a = testing::random_binary(rng, n, m);
    RatVector rhs(n), c(m);
    for (int i = 0; i < n; ++i) rhs(i) = rng.rational(0, 3);
    for (int j = 0; j < m; ++j) c(j) = rng.rational(-2, 4);
    const LpProblem p = packing_lp(a, rhs, c);
    const LpSolution s = solve(p);
    const auto oracle = testing::vertex_lp_max(a, rhs, c);
    ASSERT_TRUE(oracle.has_value());
    ASSERT_EQ(s.status, LpStatus::kOptimal);
    EXPECT_EQ(s.value, *oracle) << "trial " << trial;
    EXPECT_EQ(c.dot(s.primal), s.value);
    EXPECT_EQ(rhs.dot(s.dual), s.value);
    EXPECT_TRUE(is_dual_feasible(p, s.dual));
  }
}

TEST(LpTest, EnumeratesBothDualVertices) {
  const LpProblem p = packing_lp(example_matrix(), ones(4), ones(4));
  const DualVertices dv = enumerate_optimal_dual_vertices(p);
  EXPECT_FALSE(dv.partial);
  RatVector first(4), second(4);
  first << 1, 1, 0, 0;
  second << 0, 0, 1, 1;
  auto has = [&](const RatVector& v) {
    return std::any_of(dv.vertices.begin(), dv.vertices.end(), [&](const RatVector& u) { return u == v; });
  };
  EXPECT_TRUE(has(first));
  EXPECT_TRUE(has(second));
  for (const RatVector& v : dv.vertices) EXPECT_TRUE(is_dual_optimal(p, v));
}

TEST(LpProperty, EnumeratedVerticesAreDualOptimal) {
  testing::Rng rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.uniform(2, 4);
    const int m = rng.uniform(2, 5);
    const LpProblem p = packing_lp(testing::random_binary(rng, n, m), ones(n), ones(m));
    const DualVertices dv = enumerate_optimal_dual_vertices(p);
    ASSERT_FALSE(dv.vertices.empty());
    for (const RatVector& v : dv.vertices) EXPECT_TRUE(is_dual_optimal(p, v));
  }
}

}  // namespace
}  // namespace coregame
