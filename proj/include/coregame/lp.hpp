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
#ifndef COREGAME_LP_HPP
#define COREGAME_LP_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "coregame/exact.hpp"

namespace coregame {

enum class LpSense { kMaximize, kMinimize };
enum class RowSense { kLe, kGe, kEq };
enum class VarSign { kNonnegative, kFree };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* to_string(LpStatus status);

/// Linear program  max|min cᵀx  s.t.  a_iᵀx (≤|≥|=) rhs_i,  x_j ≥ 0 or free.
struct LpProblem {
  LpSense sense = LpSense::kMaximize;
  RatVector c;
  RatMatrix a;
  std::vector<RowSense> row_sense;
  RatVector rhs;
  std::vector<VarSign> var_sign;  // empty means all nonnegative

  Eigen::Index rows() const { return a.rows(); }
  Eigen::Index cols() const { return a.cols(); }
  VarSign sign_of(Eigen::Index j) const {
    return var_sign.empty() ? VarSign::kNonnegative : var_sign[static_cast<std::size_t>(j)];
  }
  /// Throws kDimensionMismatch when the pieces disagree in size.
  void validate() const;
};

/// Result of an exact solve.
///
/// The dual vector follows the shadow-price convention of the formal dual:
/// for a maximization, ≤ rows carry y_i ≥ 0, ≥ rows y_i ≤ 0, = rows are free,
/// and the dual constraints read Aᵀy ≥ c on nonnegative columns (= on free
/// columns). For a minimization every inequality flips. When optimal, the
/// primal and dual are both feasible and rhsᵀy equals cᵀx exactly.
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  RatVector primal;
  RatVector dual;
  std::vector<int> basis;  // standard-form column indices of the final basis
};

/// Two-phase primal simplex under Bland's rule.
LpSolution solve(const LpProblem& p);

/// Checks y against the formal dual of p (signs and column constraints only).
bool is_dual_feasible(const LpProblem& p, const RatVector& y);

/// True iff y is dual feasible and rhsᵀy equals the optimal value of p.
/// Throws kStatusNotOptimal if p has no optimum.
bool is_dual_optimal(const LpProblem& p, const RatVector& y);

struct DualVertices {
  std::vector<RatVector> vertices;
  std::size_t bases_visited = 0;
  bool partial = false;  // the basis cap was hit before the search finished
};

/// Breadth-first walk over optimal bases. Moves are primal-degenerate or
/// tied-ratio pivots that keep both primal and dual feasibility,
/// collecting the distinct dual solutions. Throws kStatusNotOptimal if p has
/// no optimum.
DualVertices enumerate_optimal_dual_vertices(const LpProblem& p, std::size_t cap = 10000);

}  // namespace coregame

#endif  // COREGAME_LP_HPP
