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
// Random instance generators and brute-force reference computations for the
// test suites. Nothing here calls the library's solver or game code, so the
// values it produces can be compared against the library.

#ifndef COREGAME_TESTS_SUPPORT_ORACLES_HPP
#define COREGAME_TESTS_SUPPORT_ORACLES_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "coregame/exact.hpp"
#include "coregame/rational.hpp"

namespace coregame::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }
  std::mt19937_64& engine() { return engine_; }
  /// p/q with lo ≤ p/q ≤ hi, q ∈ [1, max_den].
  Rational rational(int lo, int hi, int max_den = 4) {
    const int q = uniform(1, max_den);
    return Rational(uniform(lo * q, hi * q), q);
  }

 private:
  std::mt19937_64 engine_;
};

/// n×m 0/1 matrix with no zero column.
inline RatMatrix random_binary(Rng& rng, int n, int m, double density = 0.5) {
  RatMatrix a = RatMatrix::Zero(n, m);
  for (int j = 0; j < m; ++j) {
    bool any = false;
    for (int i = 0; i < n; ++i) {
      if (rng.coin(density)) a(i, j) = 1, any = true;
    }
    if (!any) a(rng.uniform(0, n - 1), j) = 1;
  }
  return a;
}

/// Symmetric matrix with off-diagonal entries in [lo, 0] and a zero diagonal.
inline RatMatrix random_submodular_q(Rng& rng, int m, int lo = -2) {
  RatMatrix q = RatMatrix::Zero(m, m);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (rng.coin(0.6)) {
        q(i, j) = rng.rational(lo, 0, 2);
        q(j, i) = q(i, j);
      }
    }
  }
  return q;
}

inline std::vector<RatVector> boolean_points(int m) {
  std::vector<RatVector> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    RatVector x = RatVector::Zero(m);
    for (int j = 0; j < m; ++j) {
      if ((s >> j) & 1U) x(j) = 1;
    }
    out.push_back(x);
  }
  return out;
}

inline Rational quadratic_value(const RatVector& b, const RatMatrix& q, const RatVector& x) {
  Rational v(0);
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    v += b(i) * x(i);
    for (Eigen::Index j = 0; j < x.size(); ++j) v += x(i) * q(i, j) * x(j);
  }
  return v;
}

inline Rational ratio_value(const RatVector& c, const RatVector& d, const Rational& d0,
                            const RatVector& x) {
  Rational num(0);
  Rational den = d0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    num += c(i) * x(i);
    den += d(i) * x(i);
  }
  return num / den;
}

/// ν(w) = max f(x) over x ∈ B^m with Ax ≤ w, by listing all points.
inline Rational packing_value(const RatMatrix& a, std::uint64_t w,
                              const std::function<Rational(const RatVector&)>& f) {
  Rational best(0);
  for (const RatVector& x : boolean_points(static_cast<int>(a.cols()))) {
    const RatVector ax = a * x;
    bool ok = true;
    for (Eigen::Index i = 0; i < ax.size() && ok; ++i) ok = ax(i) <= Rational(((w >> i) & 1U) ? 1 : 0);
    if (ok) best = max(best, f(x));
  }
  return best;
}

/// Solves a square system by textbook elimination; nullopt when singular.
inline std::optional<RatVector> solve_square(RatMatrix m, RatVector rhs) {
  const Eigen::Index n = m.rows();
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && m(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    m.row(col).swap(m.row(pivot));
    std::swap(rhs(col), rhs(pivot));
    for (Eigen::Index r = 0; r < n; ++r) {
      if (r == col || m(r, col).is_zero()) continue;
      const Rational factor = m(r, col) / m(col, col);
      m.row(r) -= factor * m.row(col);
      rhs(r) -= factor * rhs(col);
    }
  }
  RatVector x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = rhs(i) / m(i, i);
  return x;
}

/// max cᵀx s.t. Ax ≤ rhs, x ≥ 0 for a bounded feasible region, by checking
/// every vertex (every choice of m tight constraints). Small sizes only.
inline std::optional<Rational> vertex_lp_max(const RatMatrix& a, const RatVector& rhs,
                                             const RatVector& c) {
  const Eigen::Index n = a.rows();
  const Eigen::Index m = a.cols();
  // Constraint k < n is row k of A; k ≥ n is -x_{k-n} ≤ 0.
  const Eigen::Index total = n + m;
  std::optional<Rational> best;
  std::vector<Eigen::Index> pick(static_cast<std::size_t>(m));
  std::function<void(Eigen::Index, Eigen::Index)> choose = [&](Eigen::Index start, Eigen::Index depth) {
    if (depth == m) {
      RatMatrix sys(m, m);
      RatVector b(m);
      for (Eigen::Index r = 0; r < m; ++r) {
        const Eigen::Index k = pick[static_cast<std::size_t>(r)];
        if (k < n) {
          sys.row(r) = a.row(k);
          b(r) = rhs(k);
        } else {
          sys.row(r) = RatVector::Zero(m).transpose();
          sys(r, k - n) = -1;
          b(r) = 0;
        }
      }
      const auto x = solve_square(sys, b);
      if (!x) return;
      for (Eigen::Index j = 0; j < m; ++j) {
        if ((*x)(j).sign() < 0) return;
      }
      const RatVector ax = a * *x;
      for (Eigen::Index i = 0; i < n; ++i) {
        if (ax(i) > rhs(i)) return;
      }
      Rational v(0);
      for (Eigen::Index j = 0; j < m; ++j) v += c(j) * (*x)(j);
      if (!best || v > *best) best = v;
      return;
    }
    for (Eigen::Index k = start; k <= total - (m - depth); ++k) {
      pick[static_cast<std::size_t>(depth)] = k;
      choose(k + 1, depth + 1);
    }
  };
  choose(0, 0);
  return best;
}

/// Sum of y over the players in mask.
inline Rational share(const RatVector& y, std::uint64_t mask) {
  Rational s(0);
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if ((mask >> i) & 1U) s += y(i);
  }
  return s;
}

/// min 1ᵀy s.t. aᵀy ≥ ν(a) for every nonempty a, by vertex enumeration.
/// Assumes ν ≥ 0, so the singleton rows already force y ≥ 0.
inline Rational balanced_minimum(const std::vector<Rational>& values, int n) {
  const std::size_t rows = values.size() - 1;
  RatMatrix a(static_cast<Eigen::Index>(rows), n);
  RatVector rhs(static_cast<Eigen::Index>(rows));
  for (std::uint64_t s = 1; s <= rows; ++s) {
    for (int i = 0; i < n; ++i) a(s - 1, i) = ((s >> i) & 1U) ? -1 : 0;
    rhs(s - 1) = -values[s];
  }
  return -*vertex_lp_max(a, rhs, RatVector(RatVector::Constant(n, Rational(-1))));
}

/// Core test from the definition: y splits ν(1) exactly and no coalition
/// can improve on its share (cost games reverse the inequality).
inline bool in_core(const std::vector<Rational>& values, const RatVector& y, bool cost = false) {
  const std::uint64_t grand = values.size() - 1;
  if (share(y, grand) != values[grand]) return false;
  for (std::uint64_t s = 1; s < grand; ++s) {
    const Rational lhs = share(y, s);
    if (cost ? lhs > values[s] : lhs < values[s]) return false;
  }
  return true;
}

}  // namespace coregame::testing

#endif  // COREGAME_TESTS_SUPPORT_ORACLES_HPP
