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
#include "coregame/exact.hpp"

#include <sstream>

namespace coregame {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kSingular: return "singular";
    case ErrorKind::kRankDeficient: return "rank_deficient";
    case ErrorKind::kTooLarge: return "too_large";
    case ErrorKind::kInfiniteDomain: return "infinite_domain";
    case ErrorKind::kUndefinedPoint: return "undefined_point";
    case ErrorKind::kInfeasibleSubprogram: return "infeasible_subprogram";
    case ErrorKind::kAssumptionViolated: return "assumption_violated";
    case ErrorKind::kZeroGrandValue: return "zero_grand_value";
    case ErrorKind::kStatusNotOptimal: return "status_not_optimal";
    case ErrorKind::kCapExceeded: return "cap_exceeded";
    case ErrorKind::kDimensionMismatch: return "dimension_mismatch";
    case ErrorKind::kNot3B2: return "not_3B2";
    case ErrorKind::kEmptyCore: return "empty_core";
    case ErrorKind::kSolverStatus: return "solver_status";
    case ErrorKind::kInvalidInput: return "invalid_input";
  }
  return "unknown";
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  const Eigen::Index n = m.rows();
  if (m.cols() != n) throw Error(ErrorKind::kDimensionMismatch, "inverse of non-square matrix");
  RatMatrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    auto col = gauss_solve(m, unit(n, j));
    if (!col) return std::nullopt;
    out.col(j) = *col;
  }
  return out;
}

Eigen::Index rank(const RatMatrix& m) {
  RatMatrix a = m;
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < a.cols() && r < a.rows(); ++col) {
    Eigen::Index pivot = r;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    a.row(pivot).swap(a.row(r));
    for (Eigen::Index i = r + 1; i < a.rows(); ++i) {
      if (a(i, col).is_zero()) continue;
      const Rational factor = a(i, col) / a(r, col);
      for (Eigen::Index j = col; j < a.cols(); ++j) a(i, j) -= factor * a(r, j);
    }
    ++r;
  }
  return r;
}

RatMatrix left_pseudo_inverse(const RatMatrix& q) {
  const RatMatrix qt = q.transpose();
  const RatMatrix gram = qt * q;
  auto inv = inverse(gram);
  if (!inv) throw Error(ErrorKind::kRankDeficient, "generator columns are linearly dependent");
  return (*inv) * qt;
}

RatVector zeros(Eigen::Index n) { return RatVector::Constant(n, Rational(0)); }
RatVector ones(Eigen::Index n) { return RatVector::Constant(n, Rational(1)); }

RatVector unit(Eigen::Index n, Eigen::Index j) {
  RatVector v = zeros(n);
  v(j) = 1;
  return v;
}

RatMatrix identity(Eigen::Index n) {
  RatMatrix m = RatMatrix::Constant(n, n, Rational(0));
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool all_zero(const RatMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero()) return false;
    }
  }
  return true;
}

bool all_nonnegative(const RatMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j).sign() < 0) return false;
    }
  }
  return true;
}

bool is_binary(const RatMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (!(m(i, j) == Rational(0) || m(i, j) == Rational(1))) return false;
    }
  }
  return true;
}

bool is_symmetric(const RatMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) return false;
    }
  }
  return true;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::kDimensionMismatch, "dot product lengths differ");
  Rational s = 0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (!a(i).is_zero() && !b(i).is_zero()) s += a(i) * b(i);
  }
  return s;
}

Rational sum(const RatVector& v) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) s += v(i);
  return s;
}

std::string to_string(const RatVector& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v(i);
  }
  os << ")";
  return os.str();
}

std::vector<Rational> to_std(const RatVector& v) {
  return std::vector<Rational>(v.data(), v.data() + v.size());
}

RatVector from_std(const std::vector<Rational>& v) {
  RatVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i];
  return out;
}

}  // namespace coregame
