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
#include "coregame/lp.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace coregame {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal: return "optimal";
    case LpStatus::kInfeasible: return "infeasible";
    case LpStatus::kUnbounded: return "unbounded";
  }
  return "unknown";
}

void LpProblem::validate() const {
  if (c.size() != a.cols() || rhs.size() != a.rows() ||
      static_cast<Eigen::Index>(row_sense.size()) != a.rows() ||
      (!var_sign.empty() && static_cast<Eigen::Index>(var_sign.size()) != a.cols())) {
    throw Error(ErrorKind::kDimensionMismatch, "LP pieces have inconsistent sizes");
  }
}

namespace {

// Equality form  max costᵀx, Mx = b, x ≥ 0, b ≥ 0, laid out as
// [structural (free columns split) | slack/surplus | artificial].
struct StandardForm {
  int rows = 0;
  int cols = 0;
  int first_artificial = 0;
  std::vector<Rational> m;  // row-major rows x cols
  std::vector<Rational> b;
  std::vector<Rational> cost;
  std::vector<int> flip;        // -1 when the original row was negated
  std::vector<int> plus_col;    // per original variable
  std::vector<int> minus_col;   // -1 unless free
  std::vector<int> initial_basis;

  const Rational& at(int i, int j) const { return m[static_cast<std::size_t>(i) * cols + j]; }
  Rational& at(int i, int j) { return m[static_cast<std::size_t>(i) * cols + j]; }
};

StandardForm standardize(const LpProblem& p) {
  const int rows = static_cast<int>(p.rows());
  const int n = static_cast<int>(p.cols());
  StandardForm s;
  s.rows = rows;
  int col = 0;
  s.plus_col.resize(n);
  s.minus_col.assign(n, -1);
  for (int j = 0; j < n; ++j) {
    s.plus_col[j] = col++;
    if (p.sign_of(j) == VarSign::kFree) s.minus_col[j] = col++;
  }
  std::vector<RowSense> sense(p.row_sense);
  s.flip.assign(rows, 1);
  for (int i = 0; i < rows; ++i) {
    if (p.rhs(i).sign() < 0) {
      s.flip[i] = -1;
      if (sense[i] == RowSense::kLe) {
        sense[i] = RowSense::kGe;
      } else if (sense[i] == RowSense::kGe) {
        sense[i] = RowSense::kLe;
      }
    }
  }
  std::vector<int> slack_col(rows, -1);
  for (int i = 0; i < rows; ++i) {
    if (sense[i] != RowSense::kEq) slack_col[i] = col++;
  }
  s.first_artificial = col;
  std::vector<int> art_col(rows, -1);
  for (int i = 0; i < rows; ++i) {
    if (sense[i] != RowSense::kLe) art_col[i] = col++;
  }
  s.cols = col;
  s.m.assign(static_cast<std::size_t>(rows) * col, Rational(0));
  s.b.resize(rows);
  s.cost.assign(col, Rational(0));
  s.initial_basis.resize(rows);
  const bool minimize = p.sense == LpSense::kMinimize;
  for (int j = 0; j < n; ++j) {
    const Rational cj = minimize ? -p.c(j) : p.c(j);
    s.cost[s.plus_col[j]] = cj;
    if (s.minus_col[j] >= 0) s.cost[s.minus_col[j]] = -cj;
  }
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational& v = p.a(i, j);
      if (v.is_zero()) continue;
      const Rational signed_v = s.flip[i] < 0 ? -v : v;
      s.at(i, s.plus_col[j]) = signed_v;
      if (s.minus_col[j] >= 0) s.at(i, s.minus_col[j]) = -signed_v;
    }
    s.b[i] = s.flip[i] < 0 ? -p.rhs(i) : p.rhs(i);
    if (sense[i] == RowSense::kLe) {
      s.at(i, slack_col[i]) = 1;
      s.initial_basis[i] = slack_col[i];
    } else {
      if (sense[i] == RowSense::kGe) s.at(i, slack_col[i]) = -1;
      s.at(i, art_col[i]) = 1;
      s.initial_basis[i] = art_col[i];
    }
  }
  return s;
}

// Dense simplex tableau for  max costᵀx  over the rows still active.
class Tableau {
 public:
  Tableau(const StandardForm& s)
      : rows_(s.rows), cols_(s.cols), t_(s.m), rhs_(s.b), basis_(s.initial_basis) {
    row_id_.resize(rows_);
    for (int i = 0; i < rows_; ++i) row_id_[i] = i;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Rational& at(int i, int j) const { return t_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& rhs(int i) const { return rhs_[i]; }
  const Rational& reduced(int j) const { return reduced_[j]; }
  const std::vector<int>& basis() const { return basis_; }
  const std::vector<int>& row_ids() const { return row_id_; }

  void set_cost(const std::vector<Rational>& cost) {
    cost_ = cost;
    reduced_ = cost;
    for (int i = 0; i < rows_; ++i) {
      const Rational& cb = cost_[basis_[i]];
      if (cb.is_zero()) continue;
      for (int j = 0; j < cols_; ++j) {
        if (!at(i, j).is_zero()) reduced_[j] -= cb * at(i, j);
      }
    }
  }

  Rational value() const {
    Rational v = 0;
    for (int i = 0; i < rows_; ++i) {
      if (!cost_[basis_[i]].is_zero()) v += cost_[basis_[i]] * rhs_[i];
    }
    return v;
  }

  void pivot(int r, int c) {
    const Rational inv = Rational(1) / at(r, c);
    Rational* row_r = &t_[static_cast<std::size_t>(r) * cols_];
    std::vector<int> nz;
    for (int j = 0; j < cols_; ++j) {
      if (!row_r[j].is_zero()) {
        row_r[j] *= inv;
        nz.push_back(j);
      }
    }
    rhs_[r] *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r) continue;
      Rational* row_i = &t_[static_cast<std::size_t>(i) * cols_];
      if (row_i[c].is_zero()) continue;
      const Rational factor = row_i[c];
      for (int j : nz) row_i[j] -= factor * row_r[j];
      if (!rhs_[r].is_zero()) rhs_[i] -= factor * rhs_[r];
    }
    if (!reduced_.empty() && !reduced_[c].is_zero()) {
      const Rational factor = reduced_[c];
      for (int j : nz) reduced_[j] -= factor * row_r[j];
    }
    basis_[r] = c;
  }

  // Bland's rule to optimality. Returns false when unbounded.
  bool optimize(const std::vector<bool>& allowed) {
    for (;;) {
      int enter = -1;
      for (int j = 0; j < cols_; ++j) {
        if (allowed[j] && reduced_[j].sign() > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < rows_; ++i) {
        if (at(i, enter).sign() <= 0) continue;
        Rational ratio = rhs_[i] / at(i, enter);
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }

  void drop_row(int r) {
    t_.erase(t_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
             t_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_);
    rhs_.erase(rhs_.begin() + r);
    basis_.erase(basis_.begin() + r);
    row_id_.erase(row_id_.begin() + r);
    --rows_;
  }

 private:
  int rows_;
  int cols_;
  std::vector<Rational> t_;
  std::vector<Rational> rhs_;
  std::vector<int> basis_;
  std::vector<int> row_id_;  // original row index of each active row
  std::vector<Rational> cost_;
  std::vector<Rational> reduced_;
};

struct Run {
  StandardForm form;
  std::optional<Tableau> tableau;
  std::vector<bool> allowed;
  LpStatus status = LpStatus::kInfeasible;
};

Run run_two_phase(const LpProblem& p) {
  p.validate();
  Run run;
  run.form = standardize(p);
  const StandardForm& s = run.form;
  run.tableau.emplace(s);
  Tableau& t = *run.tableau;

  std::vector<Rational> phase1(s.cols, Rational(0));
  for (int j = s.first_artificial; j < s.cols; ++j) phase1[j] = -1;
  t.set_cost(phase1);
  std::vector<bool> all(s.cols, true);
  t.optimize(all);  // bounded above by zero
  if (t.value().sign() < 0) {
    run.status = LpStatus::kInfeasible;
    return run;
  }
  // Drive zero-level artificials out of the basis; rows that cannot be
  // pivoted are linear combinations of the others.
  for (int i = 0; i < t.rows();) {
    if (t.basis()[i] < s.first_artificial) {
      ++i;
      continue;
    }
    int col = -1;
    for (int j = 0; j < s.first_artificial; ++j) {
      if (!t.at(i, j).is_zero()) {
        col = j;
        break;
      }
    }
    if (col >= 0) {
      t.pivot(i, col);
      ++i;
    } else {
      t.drop_row(i);
    }
  }
  run.allowed.assign(s.cols, false);
  for (int j = 0; j < s.first_artificial; ++j) run.allowed[j] = true;
  t.set_cost(s.cost);
  run.status = t.optimize(run.allowed) ? LpStatus::kOptimal : LpStatus::kUnbounded;
  return run;
}

// Shadow prices of the standard form for the given basis, mapped back to the
// original rows and sign conventions.
RatVector dual_for_basis(const LpProblem& p, const StandardForm& s, const std::vector<int>& basis,
                         const std::vector<int>& row_ids) {
  const int r = static_cast<int>(basis.size());
  RatMatrix bt(r, r);
  RatVector cb(r);
  for (int k = 0; k < r; ++k) {
    for (int i = 0; i < r; ++i) bt(k, i) = s.at(row_ids[i], basis[k]);
    cb(k) = s.cost[basis[k]];
  }
  auto y_active = gauss_solve(bt, cb);
  if (!y_active) throw std::logic_error("simplex basis became singular");
  RatVector y = zeros(p.rows());
  for (int i = 0; i < r; ++i) {
    Rational v = (*y_active)(i);
    if (s.flip[row_ids[i]] < 0) v = -v;
    if (p.sense == LpSense::kMinimize) v = -v;
    y(row_ids[i]) = v;
  }
  return y;
}

RatVector primal_for(const LpProblem& p, const StandardForm& s, const Tableau& t) {
  std::vector<Rational> xs(s.cols, Rational(0));
  for (int i = 0; i < t.rows(); ++i) xs[t.basis()[i]] = t.rhs(i);
  RatVector x(p.cols());
  for (Eigen::Index j = 0; j < p.cols(); ++j) {
    x(j) = xs[s.plus_col[j]];
    if (s.minus_col[j] >= 0) x(j) -= xs[s.minus_col[j]];
  }
  return x;
}

bool primal_feasible(const LpProblem& p, const RatVector& x) {
  for (Eigen::Index j = 0; j < p.cols(); ++j) {
    if (p.sign_of(j) == VarSign::kNonnegative && x(j).sign() < 0) return false;
  }
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    Rational lhs = 0;
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
      if (!p.a(i, j).is_zero() && !x(j).is_zero()) lhs += p.a(i, j) * x(j);
    }
    switch (p.row_sense[static_cast<std::size_t>(i)]) {
      case RowSense::kLe: if (lhs > p.rhs(i)) return false; break;
      case RowSense::kGe: if (lhs < p.rhs(i)) return false; break;
      case RowSense::kEq: if (lhs != p.rhs(i)) return false; break;
    }
  }
  return true;
}

}  // namespace

bool is_dual_feasible(const LpProblem& p, const RatVector& y) {
  p.validate();
  if (y.size() != p.rows()) return false;
  const bool maximize = p.sense == LpSense::kMaximize;
  for (Eigen::Index i = 0; i < p.rows(); ++i) {
    const int s = y(i).sign();
    switch (p.row_sense[static_cast<std::size_t>(i)]) {
      case RowSense::kLe: if (maximize ? s < 0 : s > 0) return false; break;
      case RowSense::kGe: if (maximize ? s > 0 : s < 0) return false; break;
      case RowSense::kEq: break;
    }
  }
  for (Eigen::Index j = 0; j < p.cols(); ++j) {
    Rational col = 0;
    for (Eigen::Index i = 0; i < p.rows(); ++i) {
      if (!p.a(i, j).is_zero() && !y(i).is_zero()) col += p.a(i, j) * y(i);
    }
    if (p.sign_of(j) == VarSign::kFree) {
      if (col != p.c(j)) return false;
    } else if (maximize ? col < p.c(j) : col > p.c(j)) {
      return false;
    }
  }
  return true;
}

LpSolution solve(const LpProblem& p) {
  Run run = run_two_phase(p);
  LpSolution out;
  out.status = run.status;
  if (run.status != LpStatus::kOptimal) return out;
  const Tableau& t = *run.tableau;
  out.primal = primal_for(p, run.form, t);
  out.dual = dual_for_basis(p, run.form, t.basis(), t.row_ids());
  out.basis = t.basis();
  out.value = dot(p.c, out.primal);
  // Certificate: both sides feasible and the objective values coincide.
  if (!primal_feasible(p, out.primal) || !is_dual_feasible(p, out.dual) ||
      dot(p.rhs, out.dual) != out.value) {
    throw std::logic_error("simplex produced an invalid optimality certificate");
  }
  return out;
}

bool is_dual_optimal(const LpProblem& p, const RatVector& y) {
  const LpSolution sol = solve(p);
  if (sol.status != LpStatus::kOptimal) {
    throw Error(ErrorKind::kStatusNotOptimal,
                std::string("LP status is ") + to_string(sol.status));
  }
  return is_dual_feasible(p, y) && dot(p.rhs, y) == sol.value;
}

DualVertices enumerate_optimal_dual_vertices(const LpProblem& p, std::size_t cap) {
  Run run = run_two_phase(p);
  if (run.status != LpStatus::kOptimal) {
    throw Error(ErrorKind::kStatusNotOptimal,
                std::string("LP status is ") + to_string(run.status));
  }
  DualVertices out;
  std::set<std::vector<int>> seen;
  std::set<std::string> seen_duals;
  std::deque<Tableau> queue;
  auto key = [](std::vector<int> b) {
    std::sort(b.begin(), b.end());
    return b;
  };
  seen.insert(key(run.tableau->basis()));
  queue.push_back(*run.tableau);
  while (!queue.empty()) {
    if (out.bases_visited >= cap) {
      out.partial = true;
      break;
    }
    Tableau t = std::move(queue.front());
    queue.pop_front();
    ++out.bases_visited;
    RatVector y = dual_for_basis(p, run.form, t.basis(), t.row_ids());
    if (seen_duals.insert(to_string(y)).second) out.vertices.push_back(std::move(y));

    std::vector<bool> is_basic(run.form.cols, false);
    for (int b : t.basis()) is_basic[b] = true;
    for (int j = 0; j < t.cols(); ++j) {
      if (!run.allowed[j] || is_basic[j]) continue;
      // Keep the primal feasible: any nonzero entry in a zero row, or a
      // positive entry attaining the minimum ratio.
      std::optional<Rational> best;
      for (int i = 0; i < t.rows(); ++i) {
        if (t.at(i, j).sign() > 0) {
          Rational ratio = t.rhs(i) / t.at(i, j);
          if (!best || ratio < *best) best = ratio;
        }
      }
      for (int i = 0; i < t.rows(); ++i) {
        const Rational& pivot = t.at(i, j);
        if (pivot.is_zero()) continue;
        const bool degenerate = t.rhs(i).is_zero();
        const bool ratio_tie = pivot.sign() > 0 && best && t.rhs(i) / pivot == *best;
        if (!degenerate && !ratio_tie) continue;
        // Keep the dual feasible: a column with nonzero reduced cost may
        // enter only through a dual ratio test on a zero row.
        if (!t.reduced(j).is_zero()) {
          if (!degenerate || pivot.sign() > 0) continue;
          const Rational step = t.reduced(j) / pivot;
          bool dual_ok = true;
          for (int k = 0; k < t.cols() && dual_ok; ++k) {
            if (!run.allowed[k] || is_basic[k] || k == j || t.at(i, k).is_zero()) continue;
            if ((t.reduced(k) - step * t.at(i, k)).sign() > 0) dual_ok = false;
          }
          if (!dual_ok) continue;
        }
        std::vector<int> next = t.basis();
        next[i] = j;
        if (!seen.insert(key(next)).second) continue;
        Tableau u = t;
        u.pivot(i, j);
        queue.push_back(std::move(u));
      }
    }
  }
  return out;
}

}  // namespace coregame
