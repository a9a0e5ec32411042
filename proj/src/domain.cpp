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
#include "coregame/domain.hpp"

#include <set>
#include <sstream>

namespace coregame {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::uint64_t lattice_size(int m, int levels, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int j = 0; j < m; ++j) {
    if (total > cap / static_cast<std::uint64_t>(levels)) {
      throw Error(ErrorKind::kTooLarge, "domain has more points than the enumeration cap " +
                                            std::to_string(cap));
    }
    total *= static_cast<std::uint64_t>(levels);
  }
  if (total > cap) {
    throw Error(ErrorKind::kTooLarge,
                "domain has more points than the enumeration cap " + std::to_string(cap));
  }
  return total;
}

// Walks B^m in mask order, handing each point to keep() for filtering.
template <typename Keep>
void for_each_boolean(int m, std::uint64_t cap, Keep keep,
                      const std::function<void(const RatVector&)>& visit) {
  const std::uint64_t total = lattice_size(m, 2, cap);
  RatVector x = zeros(m);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (int j = 0; j < m; ++j) x(j) = ((mask >> j) & 1u) ? 1 : 0;
    if (keep(x)) visit(x);
  }
}

bool is_boolean_point(const RatVector& x, int m) {
  if (x.size() != m) return false;
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    if (!(x(j).is_zero() || x(j) == Rational(1))) return false;
  }
  return true;
}

bool fits_knapsack(const BooleanKnapsack& k, const RatVector& x) {
  for (Eigen::Index i = 0; i < k.weights.rows(); ++i) {
    Rational load = 0;
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      if (!x(j).is_zero()) load += k.weights(i, j) * x(j);
    }
    if (load > k.capacity(i)) return false;
  }
  return true;
}

std::string point_key(const RatVector& x) { return to_string(x); }

}  // namespace

DomainSpec boolean_domain(int m) { return DomainSpec{BooleanDomain{m}}; }
DomainSpec boolean_cardinality(int m, int k) { return DomainSpec{BooleanCardinality{m, k}}; }

DomainSpec boolean_knapsack(const RatMatrix& weights, const RatVector& capacity) {
  if (weights.rows() != capacity.size()) {
    throw Error(ErrorKind::kDimensionMismatch, "knapsack weights and capacity disagree");
  }
  return DomainSpec{BooleanKnapsack{static_cast<int>(weights.cols()), weights, capacity}};
}

DomainSpec explicit_finite(int m, std::vector<RatVector> points) {
  for (const auto& p : points) {
    if (p.size() != m) throw Error(ErrorKind::kDimensionMismatch, "explicit point has wrong size");
  }
  return DomainSpec{ExplicitFinite{m, std::move(points)}};
}

DomainSpec integer_box(int m, int upper) {
  if (upper < 0) throw Error(ErrorKind::kInvalidInput, "integer box bound must be nonnegative");
  return DomainSpec{IntegerBox{m, upper}};
}

DomainSpec orthant(int m) { return DomainSpec{Orthant{m}}; }

DomainSpec generator_cone(DomainSpec base, const RatMatrix& generators) {
  if (generators.rows() != dimension(base)) {
    throw Error(ErrorKind::kDimensionMismatch, "generator columns must match the base dimension");
  }
  return DomainSpec{GeneratorCone{std::make_shared<const DomainSpec>(std::move(base)), generators}};
}

DomainSpec coalition_indexed(int m, std::map<Coalition, DomainPtr> family) {
  for (const auto& [w, x] : family) {
    if (!x || dimension(*x) != m) {
      throw Error(ErrorKind::kDimensionMismatch, "X(" + w.to_string() + ") has wrong dimension");
    }
  }
  return DomainSpec{CoalitionIndexed{m, std::move(family)}};
}

int dimension(const DomainSpec& d) {
  return std::visit(Overloaded{
                        [](const GeneratorCone& g) { return dimension(*g.base); },
                        [](const auto& v) { return v.m; },
                    },
                    d.kind);
}

const char* kind_name(const DomainSpec& d) {
  return std::visit(Overloaded{
                        [](const BooleanDomain&) { return "boolean"; },
                        [](const BooleanCardinality&) { return "boolean_cardinality"; },
                        [](const BooleanKnapsack&) { return "boolean_knapsack"; },
                        [](const ExplicitFinite&) { return "explicit"; },
                        [](const IntegerBox&) { return "integer_box"; },
                        [](const Orthant&) { return "orthant"; },
                        [](const GeneratorCone&) { return "generator_cone"; },
                        [](const CoalitionIndexed&) { return "coalition_indexed"; },
                    },
                    d.kind);
}

bool is_enumerable(const DomainSpec& d) {
  return std::visit(Overloaded{
                        [](const Orthant&) { return false; },
                        [](const CoalitionIndexed&) { return false; },
                        [](const GeneratorCone& g) { return is_enumerable(*g.base); },
                        [](const auto&) { return true; },
                    },
                    d.kind);
}

const RatMatrix* generators(const DomainSpec& d) {
  if (const auto* g = std::get_if<GeneratorCone>(&d.kind)) return &g->generators;
  return nullptr;
}

const DomainSpec& domain_for(const DomainSpec& d, const Coalition& w) {
  const auto* family = std::get_if<CoalitionIndexed>(&d.kind);
  if (family == nullptr) return d;
  auto it = family->family.find(w);
  if (it == family->family.end()) {
    throw Error(ErrorKind::kUndefinedPoint, "no domain given for coalition " + w.to_string());
  }
  return *it->second;
}

void for_each_point(const DomainSpec& d, std::uint64_t cap,
                    const std::function<void(const RatVector&)>& visit) {
  std::visit(
      Overloaded{
          [&](const BooleanDomain& b) {
            for_each_boolean(b.m, cap, [](const RatVector&) { return true; }, visit);
          },
          [&](const BooleanCardinality& b) {
            for_each_boolean(
                b.m, cap, [&](const RatVector& x) { return sum(x) <= Rational(b.k); }, visit);
          },
          [&](const BooleanKnapsack& k) {
            for_each_boolean(
                k.m, cap, [&](const RatVector& x) { return fits_knapsack(k, x); }, visit);
          },
          [&](const ExplicitFinite& e) {
            if (e.points.size() > cap) {
              throw Error(ErrorKind::kTooLarge, "explicit domain exceeds the enumeration cap");
            }
            std::set<std::string> seen;
            for (const auto& p : e.points) {
              if (seen.insert(point_key(p)).second) visit(p);
            }
          },
          [&](const IntegerBox& b) {
            const std::uint64_t total = lattice_size(b.m, b.upper + 1, cap);
            RatVector x = zeros(b.m);
            for (std::uint64_t code = 0; code < total; ++code) {
              std::uint64_t rest = code;
              for (int j = 0; j < b.m; ++j) {
                x(j) = static_cast<long>(rest % static_cast<std::uint64_t>(b.upper + 1));
                rest /= static_cast<std::uint64_t>(b.upper + 1);
              }
              visit(x);
            }
          },
          [&](const Orthant&) {
            throw Error(ErrorKind::kInfiniteDomain, "the nonnegative orthant cannot be enumerated");
          },
          [&](const GeneratorCone& g) { for_each_point(*g.base, cap, visit); },
          [&](const CoalitionIndexed&) {
            throw Error(ErrorKind::kInfiniteDomain,
                        "a coalition-indexed family is enumerated per coalition");
          },
      },
      d.kind);
}

std::vector<RatVector> enumerate(const DomainSpec& d, std::uint64_t cap) {
  std::vector<RatVector> out;
  for_each_point(d, cap, [&](const RatVector& x) { out.push_back(x); });
  return out;
}

bool contains(const DomainSpec& d, const RatVector& x) {
  return std::visit(
      Overloaded{
          [&](const BooleanDomain& b) { return is_boolean_point(x, b.m); },
          [&](const BooleanCardinality& b) {
            return is_boolean_point(x, b.m) && sum(x) <= Rational(b.k);
          },
          [&](const BooleanKnapsack& k) { return is_boolean_point(x, k.m) && fits_knapsack(k, x); },
          [&](const ExplicitFinite& e) {
            if (x.size() != e.m) return false;
            for (const auto& p : e.points) {
              if (p == x) return true;
            }
            return false;
          },
          [&](const IntegerBox& b) {
            if (x.size() != b.m) return false;
            for (Eigen::Index j = 0; j < x.size(); ++j) {
              if (!x(j).is_integer() || x(j).sign() < 0 || x(j) > Rational(b.upper)) return false;
            }
            return true;
          },
          [&](const Orthant& o) { return x.size() == o.m && all_nonnegative(x); },
          [&](const GeneratorCone& g) { return contains(*g.base, x); },
          [&](const CoalitionIndexed&) -> bool {
            throw Error(ErrorKind::kInvalidInput, "membership in X(w) needs a coalition");
          },
      },
      d.kind);
}

std::string AssumptionReport::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i];
  }
  return os.str();
}

namespace {

void check_basis_points(const DomainSpec& d, const Rational& scale, AssumptionReport& report,
                        const std::string& label) {
  const int m = dimension(d);
  if (!contains(d, zeros(m))) report.violations.push_back("" + label + " does not contain 0");
  for (int j = 0; j < m; ++j) {
    RatVector e = unit(m, j);
    e(j) = scale;
    if (!contains(d, e)) {
      std::string point = scale == Rational(1) ? "e_" + std::to_string(j + 1)
                                               : scale.to_string() + "·e_" + std::to_string(j + 1);
      report.violations.push_back("" + label + " does not contain " + point);
    }
  }
}

void check_nonnegative_points(const DomainSpec& d, std::uint64_t cap, AssumptionReport& report,
                              const std::string& label) {
  if (!is_enumerable(d)) return;
  bool negative = false;
  for_each_point(d, cap, [&](const RatVector& x) { negative = negative || !all_nonnegative(x); });
  if (negative) report.violations.push_back(label + " has a point outside the nonnegative orthant");
}

void check_generators(const GeneratorCone& g, const RatMatrix& a, std::uint64_t cap,
                      AssumptionReport& report) {
  const RatMatrix& q = g.generators;
  const Eigen::Index k = q.cols();
  if (rank(q) != k) {
    report.violations.push_back("generator columns are linearly dependent");
    return;
  }
  const RatMatrix pinv = left_pseudo_inverse(q);
  const RatMatrix proj = q * pinv;
  for (Eigen::Index j = 0; j < k; ++j) {
    const RatVector qj = q.col(j);
    if (!contains(*g.base, qj)) {
      report.violations.push_back("generator q_" + std::to_string(j + 1) + " is not in X");
    }
    if (a.cols() == q.rows()) {
      const RatVector aq = a * qj;
      if (!is_binary(aq) || all_zero(aq)) {
        report.violations.push_back("A·q_" + std::to_string(j + 1) +
                                    " is not a nonzero 0/1 vector");
      }
    }
  }
  if (!contains(*g.base, zeros(q.rows()))) report.violations.push_back("X does not contain 0");
  bool bad_span = false;
  bool bad_sign = false;
  for_each_point(*g.base, cap, [&](const RatVector& x) {
    if (RatVector(proj * x) != x) bad_span = true;
    if (!all_nonnegative(RatVector(pinv * x))) bad_sign = true;
  });
  if (bad_span) report.violations.push_back("a point of X is not in the span of the generators");
  if (bad_sign) report.violations.push_back("a point of X is outside the cone of the generators");
}

void check_family(const CoalitionIndexed& c, const RatMatrix& a, AssumptionReport& report) {
  const int n = static_cast<int>(a.rows());
  for (const auto& [w, x] : c.family) {
    if (w.players() != n) {
      report.violations.push_back("coalition key " + w.to_string() + " has the wrong length");
      continue;
    }
    if (!is_enumerable(*x)) {
      report.violations.push_back("X(" + w.to_string() + ") is not finite");
      continue;
    }
    if (!contains(*x, zeros(c.m))) {
      report.violations.push_back("0 is not in X(" + w.to_string() + ")");
    }
  }
  if (a.cols() == c.m && is_binary(a)) {
    for (int j = 0; j < c.m; ++j) {
      const Coalition w = Coalition::from_vector(a.col(j));
      auto it = c.family.find(w);
      if (it == c.family.end() || !contains(*it->second, unit(c.m, j))) {
        report.violations.push_back("e_" + std::to_string(j + 1) + " is not in X(A·e_" +
                                    std::to_string(j + 1) + ")");
      }
    }
  }
  report.notes.push_back(
      "checked 0 ∈ X(w) for every listed w, which is stronger than requiring only 0 ∈ X(0)");
  const std::uint64_t listed = c.family.size();
  if (n <= Coalition::kMaxPlayers && listed < coalition_count(n)) {
    report.notes.push_back(std::to_string(coalition_count(n) - listed) +
                           " coalitions have no X(w); evaluating them fails");
  }
}

}  // namespace

AssumptionReport check_assumptions(const DomainSpec& d, const RatMatrix& a,
                                   const Rational& rhs_scale, std::uint64_t cap) {
  AssumptionReport report;
  const int m = dimension(d);
  if (a.cols() != m) {
    report.violations.push_back("A has " + std::to_string(a.cols()) + " columns but X has dimension " +
                                std::to_string(m));
  }
  if (!is_binary(a)) report.violations.push_back("A is not a 0/1 matrix");
  if (rhs_scale.sign() <= 0) report.violations.push_back("right-hand side scale must be positive");
  const bool cone = std::holds_alternative<GeneratorCone>(d.kind);
  if (!cone) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (all_zero(a.col(j))) {
        report.violations.push_back("A has a zero column " + std::to_string(j + 1));
      }
    }
  }
  std::visit(Overloaded{
                 [&](const GeneratorCone& g) {
                   check_nonnegative_points(*g.base, cap, report, "X");
                   check_generators(g, a, cap, report);
                 },
                 [&](const CoalitionIndexed& c) { check_family(c, a, report); },
                 [&](const BooleanKnapsack& k) {
                   if (!all_nonnegative(k.weights) || !all_nonnegative(k.capacity)) {
                     report.violations.push_back("knapsack weights and capacities must be nonnegative");
                   }
                   check_basis_points(d, rhs_scale, report, "X");
                 },
                 [&](const ExplicitFinite&) {
                   check_nonnegative_points(d, cap, report, "X");
                   check_basis_points(d, rhs_scale, report, "X");
                 },
                 [&](const auto&) { check_basis_points(d, rhs_scale, report, "X"); },
             },
             d.kind);
  return report;
}

}  // namespace coregame
