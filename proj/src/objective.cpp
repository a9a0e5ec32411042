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
#include "coregame/objective.hpp"

#include <algorithm>
#include <functional>

#include "coregame/lp.hpp"

namespace coregame {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::vector<Rational> key_of(const RatVector& x) { return to_std(x); }

void require(bool condition, ErrorKind kind, const std::string& message) {
  if (!condition) throw Error(kind, message);
}

Rational quadratic_form(const RatMatrix& q, const RatVector& x) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (x(i).is_zero()) continue;
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      if (x(j).is_zero() || q(i, j).is_zero()) continue;
      s += x(i) * q(i, j) * x(j);
    }
  }
  return s;
}

}  // namespace

Objective::Objective(std::shared_ptr<const ObjectiveNode> node) : node_(std::move(node)) {}

Objective Objective::linear(RatVector c) {
  return Objective(std::make_shared<const ObjectiveNode>(ObjectiveNode{LinearObjective{std::move(c)}}));
}

Objective Objective::quadratic(RatVector b, RatMatrix q) {
  require(q.rows() == b.size() && q.cols() == b.size(), ErrorKind::kDimensionMismatch,
          "quadratic Q must be m×m with m = |b|");
  require(is_symmetric(q), ErrorKind::kInvalidInput, "quadratic Q must be symmetric");
  return Objective(std::make_shared<const ObjectiveNode>(
      ObjectiveNode{QuadraticObjective{std::move(b), std::move(q)}}));
}

Objective Objective::ratio(RatVector c, RatVector d, Rational d0) {
  require(c.size() == d.size(), ErrorKind::kDimensionMismatch, "ratio c and d differ in length");
  require(all_nonnegative(c) && all_nonnegative(d), ErrorKind::kInvalidInput,
          "ratio objective needs c ≥ 0 and d ≥ 0");
  require(d0.sign() > 0, ErrorKind::kInvalidInput, "ratio objective needs d0 > 0");
  bool zero_c = false;
  for (Eigen::Index i = 0; i < c.size(); ++i) zero_c = zero_c || c(i).is_zero();
  Objective f(std::make_shared<const ObjectiveNode>(
      ObjectiveNode{RatioObjective{std::move(c), std::move(d), std::move(d0)}}));
  if (zero_c) f.warnings_.push_back("ratio objective has a zero numerator coefficient");
  return f;
}

Objective Objective::table(int m, const std::vector<std::pair<RatVector, Rational>>& entries) {
  TableObjective t{m, {}};
  for (const auto& [x, v] : entries) {
    require(x.size() == m, ErrorKind::kDimensionMismatch, "table point has wrong dimension");
    t.values[key_of(x)] = v;
  }
  Objective f(std::make_shared<const ObjectiveNode>(ObjectiveNode{std::move(t)}));
  f.validate_grounded();
  return f;
}

Objective Objective::scaled(Rational alpha, Objective inner) {
  require(alpha.sign() >= 0, ErrorKind::kInvalidInput, "scale factor must be nonnegative");
  auto warnings = inner.warnings_;
  Objective f(std::make_shared<const ObjectiveNode>(
      ObjectiveNode{ScaledObjective{std::move(alpha), std::move(inner)}}));
  f.warnings_ = std::move(warnings);
  return f;
}

Objective Objective::sum(std::vector<Objective> terms) {
  require(!terms.empty(), ErrorKind::kInvalidInput, "sum needs at least one term");
  std::vector<std::string> warnings;
  for (const auto& t : terms) {
    require(t.dimension() == terms.front().dimension(), ErrorKind::kDimensionMismatch,
            "sum terms differ in dimension");
    warnings.insert(warnings.end(), t.warnings_.begin(), t.warnings_.end());
  }
  Objective f(std::make_shared<const ObjectiveNode>(ObjectiveNode{SumObjective{std::move(terms)}}));
  f.warnings_ = std::move(warnings);
  return f;
}

Objective Objective::max(Objective first, Objective second) {
  require(first.dimension() == second.dimension(), ErrorKind::kDimensionMismatch,
          "max operands differ in dimension");
  std::vector<std::string> warnings = first.warnings_;
  warnings.insert(warnings.end(), second.warnings_.begin(), second.warnings_.end());
  Objective f(std::make_shared<const ObjectiveNode>(
      ObjectiveNode{MaxObjective{std::move(first), std::move(second)}}));
  f.warnings_ = std::move(warnings);
  return f;
}

Objective Objective::precomposed(RatMatrix m, Objective inner) {
  require(m.rows() == inner.dimension(), ErrorKind::kDimensionMismatch,
          "precomposition matrix rows must match the inner dimension");
  auto warnings = inner.warnings_;
  Objective f(std::make_shared<const ObjectiveNode>(
      ObjectiveNode{PrecomposedObjective{std::move(m), std::move(inner)}}));
  f.warnings_ = std::move(warnings);
  return f;
}

Objective Objective::coalition_dependent(
    int m, const std::vector<std::tuple<RatVector, Coalition, Rational>>& entries) {
  CoalitionDependentObjective t{m, {}};
  for (const auto& [x, w, v] : entries) {
    require(x.size() == m, ErrorKind::kDimensionMismatch, "table point has wrong dimension");
    t.values[{key_of(x), w}] = v;
  }
  Objective f(std::make_shared<const ObjectiveNode>(ObjectiveNode{std::move(t)}));
  f.validate_grounded();
  return f;
}

void Objective::validate_grounded() const {
  if (const auto* t = std::get_if<TableObjective>(&node_->kind)) {
    auto it = t->values.find(key_of(zeros(t->m)));
    require(it == t->values.end() || it->second.is_zero(), ErrorKind::kAssumptionViolated,
            "objective is not grounded: f(0) ≠ 0");
  }
  if (const auto* t = std::get_if<CoalitionDependentObjective>(&node_->kind)) {
    const auto origin = key_of(zeros(t->m));
    for (const auto& [key, v] : t->values) {
      require(key.first != origin || v.is_zero(), ErrorKind::kAssumptionViolated,
              "objective is not grounded: f(0, " + key.second.to_string() + ") ≠ 0");
    }
  }
}

int Objective::dimension() const {
  return std::visit(
      Overloaded{
          [](const LinearObjective& o) { return static_cast<int>(o.c.size()); },
          [](const QuadraticObjective& o) { return static_cast<int>(o.b.size()); },
          [](const RatioObjective& o) { return static_cast<int>(o.c.size()); },
          [](const TableObjective& o) { return o.m; },
          [](const ScaledObjective& o) { return o.inner.dimension(); },
          [](const SumObjective& o) { return o.terms.front().dimension(); },
          [](const MaxObjective& o) { return o.first.dimension(); },
          [](const PrecomposedObjective& o) { return static_cast<int>(o.m.cols()); },
          [](const CoalitionDependentObjective& o) { return o.m; },
      },
      node_->kind);
}

bool Objective::depends_on_coalition() const {
  return std::visit(
      Overloaded{
          [](const CoalitionDependentObjective&) { return true; },
          [](const ScaledObjective& o) { return o.inner.depends_on_coalition(); },
          [](const SumObjective& o) {
            return std::any_of(o.terms.begin(), o.terms.end(),
                               [](const Objective& t) { return t.depends_on_coalition(); });
          },
          [](const MaxObjective& o) {
            return o.first.depends_on_coalition() || o.second.depends_on_coalition();
          },
          [](const PrecomposedObjective& o) { return o.inner.depends_on_coalition(); },
          [](const auto&) { return false; },
      },
      node_->kind);
}

const char* kind_name(const Objective& f) {
  return std::visit(Overloaded{
                        [](const LinearObjective&) { return "linear"; },
                        [](const QuadraticObjective&) { return "quadratic"; },
                        [](const RatioObjective&) { return "ratio"; },
                        [](const TableObjective&) { return "table"; },
                        [](const ScaledObjective&) { return "scaled"; },
                        [](const SumObjective&) { return "sum"; },
                        [](const MaxObjective&) { return "max"; },
                        [](const PrecomposedObjective&) { return "precomposed"; },
                        [](const CoalitionDependentObjective&) { return "coalition_dependent"; },
                    },
                    f.node().kind);
}

Rational eval(const Objective& f, const RatVector& x, const std::optional<Coalition>& w) {
  require(x.size() == f.dimension(), ErrorKind::kDimensionMismatch,
          "point has dimension " + std::to_string(x.size()) + ", objective expects " +
              std::to_string(f.dimension()));
  return std::visit(
      Overloaded{
          [&](const LinearObjective& o) { return dot(o.c, x); },
          [&](const QuadraticObjective& o) { return dot(o.b, x) + quadratic_form(o.q, x); },
          [&](const RatioObjective& o) { return dot(o.c, x) / (o.d0 + dot(o.d, x)); },
          [&](const TableObjective& o) {
            auto it = o.values.find(key_of(x));
            if (it != o.values.end()) return it->second;
            if (all_zero(x)) return Rational(0);
            throw Error(ErrorKind::kUndefinedPoint, "table has no value at " + to_string(x));
          },
          [&](const ScaledObjective& o) { return o.alpha * eval(o.inner, x, w); },
          [&](const SumObjective& o) {
            Rational s = 0;
            for (const auto& t : o.terms) s += eval(t, x, w);
            return s;
          },
          [&](const MaxObjective& o) {
            return coregame::max(eval(o.first, x, w), eval(o.second, x, w));
          },
          [&](const PrecomposedObjective& o) { return eval(o.inner, RatVector(o.m * x), w); },
          [&](const CoalitionDependentObjective& o) {
            if (!w) {
              throw Error(ErrorKind::kInvalidInput, "coalition-dependent objective needs w");
            }
            auto it = o.values.find({key_of(x), *w});
            if (it != o.values.end()) return it->second;
            if (all_zero(x)) return Rational(0);
            throw Error(ErrorKind::kUndefinedPoint,
                        "table has no value at " + to_string(x) + " for w = " + w->to_string());
          },
      },
      f.node().kind);
}

const char* to_string(RelaxationKind kind) {
  switch (kind) {
    case RelaxationKind::kStandard: return "standard";
    case RelaxationKind::kBScaled: return "b-scaled";
    case RelaxationKind::kQGenerator: return "Q-generator";
    case RelaxationKind::kADependent: return "A-dependent";
  }
  return "unknown";
}

BasisCoefficients basis_coefficients(const Objective& f, RelaxationKind kind,
                                     const RelaxationContext& ctx) {
  const int m = f.dimension();
  BasisCoefficients out;
  out.kind = kind;
  switch (kind) {
    case RelaxationKind::kStandard: {
      require(!f.depends_on_coalition(), ErrorKind::kInvalidInput,
              "coalition-dependent objectives use the A-dependent relaxation");
      out.coeffs.resize(m);
      for (int j = 0; j < m; ++j) out.coeffs(j) = eval(f, unit(m, j));
      break;
    }
    case RelaxationKind::kBScaled: {
      require(ctx.rhs_scale.has_value(), ErrorKind::kInvalidInput, "b-scaled relaxation needs b");
      const Rational& b = *ctx.rhs_scale;
      require(b.sign() > 0, ErrorKind::kInvalidInput, "b must be positive");
      out.coeffs.resize(m);
      for (int j = 0; j < m; ++j) {
        RatVector e = zeros(m);
        e(j) = b;
        out.coeffs(j) = eval(f, e) / b;
      }
      break;
    }
    case RelaxationKind::kQGenerator: {
      require(ctx.generators.has_value(), ErrorKind::kInvalidInput,
              "generator relaxation needs the generator matrix");
      const RatMatrix& q = *ctx.generators;
      require(q.rows() == m, ErrorKind::kDimensionMismatch, "generators have wrong dimension");
      out.coeffs.resize(q.cols());
      for (Eigen::Index j = 0; j < q.cols(); ++j) out.coeffs(j) = eval(f, RatVector(q.col(j)));
      out.pseudo_inverse = left_pseudo_inverse(q);
      break;
    }
    case RelaxationKind::kADependent: {
      require(ctx.a.has_value(), ErrorKind::kInvalidInput, "A-dependent relaxation needs A");
      const RatMatrix& a = *ctx.a;
      require(a.cols() == m, ErrorKind::kDimensionMismatch, "A has wrong column count");
      out.coeffs.resize(m);
      for (int j = 0; j < m; ++j) {
        out.coeffs(j) = eval(f, unit(m, j), Coalition::from_vector(a.col(j)));
      }
      break;
    }
  }
  return out;
}

Rational relaxation_value(const BasisCoefficients& bc, const RatVector& x) {
  if (bc.pseudo_inverse) return dot(bc.coeffs, RatVector(*bc.pseudo_inverse * x));
  return dot(bc.coeffs, x);
}

namespace {

// Scans every relevant (x, w) and calls check(f-value, F-value) until it
// returns false.
IsVerdict scan_relaxation(const Objective& f, const DomainSpec& d, RelaxationKind kind,
                          const RelaxationContext& ctx, std::uint64_t cap,
                          const std::function<bool(const Rational&, const Rational&)>& ok) {
  RelaxationContext local = ctx;
  if (kind == RelaxationKind::kQGenerator && !local.generators) {
    if (const RatMatrix* q = generators(d)) local.generators = *q;
  }
  const BasisCoefficients bc = basis_coefficients(f, kind, local);
  IsVerdict verdict;
  auto record = [&](const RatVector& x, std::optional<Coalition> w) {
    if (!verdict.holds) return;
    if (!ok(eval(f, x, w), relaxation_value(bc, x))) {
      verdict.holds = false;
      verdict.witness = x;
      verdict.witness_coalition = w;
    }
  };

  if (kind == RelaxationKind::kADependent) {
    const RatMatrix& a = *local.a;
    const int n = static_cast<int>(a.rows());
    bool monotone = true;
    std::string monotone_note;
    for (std::uint64_t mask = 0; mask < coalition_count(n); ++mask) {
      const Coalition w(n, mask);
      const RatVector wv = w.to_vector();
      const DomainSpec& xw = domain_for(d, w);
      for_each_point(xw, cap, [&](const RatVector& x) {
        const RatVector ax = a * x;
        for (int i = 0; i < n; ++i) {
          if (ax(i) > wv(i)) return;
        }
        record(x, w);
        if (!monotone) return;
        for (int i = 0; i < n; ++i) {
          if (w.contains(i)) continue;
          const Coalition bigger(n, mask | (std::uint64_t{1} << i));
          if (eval(f, x, bigger) < eval(f, x, w)) {
            monotone = false;
            monotone_note = "f(x, w) decreases in w at x = " + to_string(x) +
                            ", w = " + w.to_string() + " → " + bigger.to_string();
            return;
          }
        }
      });
    }
    if (!monotone) verdict.notes.push_back(monotone_note);
    return verdict;
  }

  if (const auto* family = std::get_if<CoalitionIndexed>(&d.kind)) {
    for (const auto& [w, xw] : family->family) {
      for_each_point(*xw, cap, [&](const RatVector& x) { record(x, std::nullopt); });
    }
    return verdict;
  }
  for_each_point(d, cap, [&](const RatVector& x) { record(x, std::nullopt); });
  return verdict;
}

}  // namespace

IsVerdict is_individually_subadditive(const Objective& f, const DomainSpec& d, RelaxationKind kind,
                                      const RelaxationContext& ctx, std::uint64_t cap) {
  return scan_relaxation(f, d, kind, ctx, cap,
                         [](const Rational& fx, const Rational& big_f) { return fx <= big_f; });
}

IsVerdict is_individually_superadditive(const Objective& f, const DomainSpec& d,
                                        RelaxationKind kind, const RelaxationContext& ctx,
                                        std::uint64_t cap) {
  return scan_relaxation(f, d, kind, ctx, cap,
                         [](const Rational& fx, const Rational& big_f) { return fx >= big_f; });
}

namespace {

RatVector mask_point(int m, std::uint64_t mask) {
  RatVector x = zeros(m);
  for (int j = 0; j < m; ++j) {
    if ((mask >> j) & 1u) x(j) = 1;
  }
  return x;
}

std::string mask_string(int m, std::uint64_t mask) { return Coalition(m, mask).to_string(); }

// min Σ λ(w) f(w) over w ⊆ v, w ≠ 0, with Σ wλ(w) (≥ | =) v and λ ≥ 0.
// Returns nullopt when unbounded below.
std::optional<Rational> cover_lp(const std::vector<Rational>& values, int m, std::uint64_t v,
                                 RowSense sense) {
  std::vector<std::uint64_t> columns;
  for (std::uint64_t w = 1; w < values.size(); ++w) {
    if ((w & ~v) == 0) columns.push_back(w);
  }
  LpProblem p;
  p.sense = LpSense::kMinimize;
  p.c.resize(static_cast<Eigen::Index>(columns.size()));
  p.a = RatMatrix::Constant(m, static_cast<Eigen::Index>(columns.size()), Rational(0));
  for (std::size_t k = 0; k < columns.size(); ++k) {
    p.c(static_cast<Eigen::Index>(k)) = values[columns[k]];
    for (int i = 0; i < m; ++i) {
      if ((columns[k] >> i) & 1u) p.a(i, static_cast<Eigen::Index>(k)) = 1;
    }
  }
  p.row_sense.assign(static_cast<std::size_t>(m), sense);
  p.rhs = mask_point(m, v);
  const LpSolution sol = solve(p);
  if (sol.status == LpStatus::kUnbounded) return std::nullopt;
  if (sol.status != LpStatus::kOptimal) {
    throw Error(ErrorKind::kSolverStatus, "cover LP unexpectedly infeasible");
  }
  return sol.value;
}

}  // namespace

ClassVerdicts class_checks(const Objective& f, int max_m) {
  const int m = f.dimension();
  if (m > max_m) {
    throw Error(ErrorKind::kTooLarge, "class checks limited to m ≤ " + std::to_string(max_m));
  }
  const std::uint64_t total = coalition_count(m);
  std::vector<Rational> values(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) values[mask] = eval(f, mask_point(m, mask));

  ClassVerdicts out;
  out.monotone = true;
  for (std::uint64_t s = 0; s < total && out.monotone; ++s) {
    for (int i = 0; i < m; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      if ((s & bit) == 0 && values[s | bit] < values[s]) {
        out.monotone = false;
        out.witnesses["monotone"] =
            "f(" + mask_string(m, s | bit) + ") < f(" + mask_string(m, s) + ")";
        break;
      }
    }
  }

  out.individually_subadditive = true;
  for (std::uint64_t s = 0; s < total; ++s) {
    Rational relax = 0;
    for (int i = 0; i < m; ++i) {
      if ((s >> i) & 1u) relax += values[std::uint64_t{1} << i];
    }
    if (values[s] > relax) {
      out.individually_subadditive = false;
      out.witnesses["individually_subadditive"] = "f(" + mask_string(m, s) + ") > F";
      break;
    }
  }

  out.subadditive = true;
  for (std::uint64_t s = 1; s < total && out.subadditive; ++s) {
    // Proper nonempty submasks t of s, paired with s \ t.
    for (std::uint64_t t = (s - 1) & s; t > 0; t = (t - 1) & s) {
      const std::uint64_t u = s & ~t;
      if (t > u) continue;
      if (values[s] > values[t] + values[u]) {
        out.subadditive = false;
        out.witnesses["subadditive"] = "f(" + mask_string(m, s) + ") > f(" + mask_string(m, t) +
                                       ") + f(" + mask_string(m, u) + ")";
        break;
      }
    }
  }

  out.submodular = true;
  for (std::uint64_t s = 0; s < total && out.submodular; ++s) {
    for (int i = 0; i < m && out.submodular; ++i) {
      const std::uint64_t bi = std::uint64_t{1} << i;
      if (s & bi) continue;
      for (int j = i + 1; j < m; ++j) {
        const std::uint64_t bj = std::uint64_t{1} << j;
        if (s & bj) continue;
        if (values[s | bi] + values[s | bj] < values[s | bi | bj] + values[s]) {
          out.submodular = false;
          out.witnesses["submodular"] = "f(" + mask_string(m, s | bi) + ") + f(" +
                                        mask_string(m, s | bj) + ") < f(" +
                                        mask_string(m, s | bi | bj) + ") + f(" +
                                        mask_string(m, s) + ")";
          break;
        }
      }
    }
  }

  const std::uint64_t grand = total - 1;
  if (m == 0) {
    out.grand_fractionally_subadditive = true;
    out.fractionally_subadditive = true;
    return out;
  }
  const auto gfs = cover_lp(values, m, grand, RowSense::kEq);
  out.grand_fractionally_subadditive = gfs && *gfs >= values[grand];
  if (!out.grand_fractionally_subadditive) {
    out.witnesses["grand_fractionally_subadditive"] =
        gfs ? "balanced cover of 1 costs " + gfs->to_string() + " < f(1) = " +
                  values[grand].to_string()
            : "balanced cover LP is unbounded";
  }

  out.fractionally_subadditive = true;
  for (std::uint64_t v = 1; v < total; ++v) {
    const auto fs = cover_lp(values, m, v, RowSense::kGe);
    if (!fs || *fs < values[v]) {
      out.fractionally_subadditive = false;
      out.witnesses["fractionally_subadditive"] =
          fs ? "fractional cover of " + mask_string(m, v) + " costs " + fs->to_string() +
                   " < f = " + values[v].to_string()
             : "fractional cover LP of " + mask_string(m, v) + " is unbounded";
      break;
    }
  }
  return out;
}

const char* to_string(QuadraticDomainKind kind) {
  switch (kind) {
    case QuadraticDomainKind::kBoolean: return "boolean";
    case QuadraticDomainKind::kBox: return "box";
    case QuadraticDomainKind::kOrthant: return "orthant";
    case QuadraticDomainKind::kFullSpace: return "full_space";
  }
  return "unknown";
}

bool quadratic_is_characterization(QuadraticDomainKind kind, const RatVector& b,
                                   const RatMatrix& q) {
  require(q.rows() == b.size() && q.cols() == b.size(), ErrorKind::kDimensionMismatch,
          "Q must be m×m with m = |b|");
  require(is_symmetric(q), ErrorKind::kInvalidInput, "Q must be symmetric");
  const Eigen::Index m = q.rows();
  if (kind == QuadraticDomainKind::kFullSpace) return all_zero(q);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < m; ++j) {
      if (i != j && q(i, j).sign() > 0) return false;
    }
    if (kind == QuadraticDomainKind::kBox && q(i, i).sign() < 0) return false;
    if (kind == QuadraticDomainKind::kOrthant && !q(i, i).is_zero()) return false;
  }
  return true;
}

}  // namespace coregame
