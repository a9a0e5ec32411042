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

#ifndef COREGAME_EXACT_HPP
#define COREGAME_EXACT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "coregame/error.hpp"
#include "coregame/rational.hpp"

namespace coregame {

using RatVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Solves M x = rhs exactly by Gauss-Jordan elimination with first-nonzero
/// pivoting. Returns nullopt when M is singular. Throws kDimensionMismatch
/// when M is not square or rhs has the wrong length.
template <typename MatDerived, typename VecDerived>
std::optional<RatVector> gauss_solve(const Eigen::MatrixBase<MatDerived>& m,
                                     const Eigen::MatrixBase<VecDerived>& rhs) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n || rhs.size() != n) {
    throw Error(ErrorKind::kDimensionMismatch, "gauss_solve expects a square system");
  }
  RatMatrix a(n, n + 1);
  a.leftCols(n) = m;
  a.col(n) = rhs;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) a.row(pivot).swap(a.row(col));
    const Rational inv = Rational(1) / a(col, col);
    for (Eigen::Index j = col; j <= n; ++j) a(col, j) *= inv;
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Rational factor = a(r, col);
      for (Eigen::Index j = col; j <= n; ++j) {
        if (!a(col, j).is_zero()) a(r, j) -= factor * a(col, j);
      }
    }
  }
  return RatVector(a.col(n));
}

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Rank by exact row reduction.
Eigen::Index rank(const RatMatrix& m);

/// Left pseudo-inverse (QᵀQ)⁻¹Qᵀ of a matrix with independent columns.
/// Throws kRankDeficient otherwise. The result satisfies Q†Q = I exactly.
RatMatrix left_pseudo_inverse(const RatMatrix& q);

RatVector zeros(Eigen::Index n);
RatVector ones(Eigen::Index n);
RatVector unit(Eigen::Index n, Eigen::Index j);
RatMatrix identity(Eigen::Index n);

bool all_zero(const RatMatrix& m);
bool all_nonnegative(const RatMatrix& m);
bool is_binary(const RatMatrix& m);
bool is_symmetric(const RatMatrix& m);

Rational dot(const RatVector& a, const RatVector& b);
Rational sum(const RatVector& v);

std::string to_string(const RatVector& v);
std::vector<Rational> to_std(const RatVector& v);
RatVector from_std(const std::vector<Rational>& v);

}  // namespace coregame

#endif  // COREGAME_EXACT_HPP
