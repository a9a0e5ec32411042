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
#ifndef COREGAME_DOMAIN_HPP
#define COREGAME_DOMAIN_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "coregame/coalition.hpp"
#include "coregame/exact.hpp"

namespace coregame {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

struct DomainSpec;
using DomainPtr = std::shared_ptr<const DomainSpec>;

/// B^m.
struct BooleanDomain {
  int m = 0;
};

/// {x ∈ B^m : Σx ≤ k}.
struct BooleanCardinality {
  int m = 0;
  int k = 0;
};

/// {x ∈ B^m : Wx ≤ capacity} with nonnegative W and capacity.
struct BooleanKnapsack {
  int m = 0;
  RatMatrix weights;
  RatVector capacity;
};

/// An explicit list of nonnegative points.
struct ExplicitFinite {
  int m = 0;
  std::vector<RatVector> points;
};

/// {0, 1, ..., upper}^m; the natural domain for scaled right-hand sides.
struct IntegerBox {
  int m = 0;
  int upper = 1;
};

/// R^m_+. Never enumerated; only its cone enters the relaxation.
struct Orthant {
  int m = 0;
};

/// A finite base set whose cone is generated by the independent columns of
/// `generators`.
struct GeneratorCone {
  DomainPtr base;
  RatMatrix generators;
};

/// A domain X(w) per coalition, given extensionally.
struct CoalitionIndexed {
  int m = 0;
  std::map<Coalition, DomainPtr> family;
};

struct DomainSpec {
  std::variant<BooleanDomain, BooleanCardinality, BooleanKnapsack, ExplicitFinite, IntegerBox,
               Orthant, GeneratorCone, CoalitionIndexed>
      kind;
};

DomainSpec boolean_domain(int m);
DomainSpec boolean_cardinality(int m, int k);
DomainSpec boolean_knapsack(const RatMatrix& weights, const RatVector& capacity);
DomainSpec explicit_finite(int m, std::vector<RatVector> points);
DomainSpec integer_box(int m, int upper);
DomainSpec orthant(int m);
DomainSpec generator_cone(DomainSpec base, const RatMatrix& generators);
DomainSpec coalition_indexed(int m, std::map<Coalition, DomainPtr> family);

int dimension(const DomainSpec& d);
const char* kind_name(const DomainSpec& d);

/// True for variants whose points can be listed (everything except the
/// orthant and the coalition-indexed family as a whole).
bool is_enumerable(const DomainSpec& d);

/// The generator matrix of a GeneratorCone, or nullptr.
const RatMatrix* generators(const DomainSpec& d);

/// X(w) for coalition-indexed domains, the domain itself otherwise. Throws
/// kUndefinedPoint when the family has no entry for w.
const DomainSpec& domain_for(const DomainSpec& d, const Coalition& w);

/// Visits every point exactly once. Throws kTooLarge when the lattice exceeds
/// `cap` points and kInfiniteDomain for variants that cannot be listed.
void for_each_point(const DomainSpec& d, std::uint64_t cap,
                    const std::function<void(const RatVector&)>& visit);

std::vector<RatVector> enumerate(const DomainSpec& d, std::uint64_t cap = kDefaultEnumerationCap);

/// Membership test consistent with enumerate(). Throws kInvalidInput for a
/// coalition-indexed family (call domain_for first).
bool contains(const DomainSpec& d, const RatVector& x);

struct AssumptionReport {
  std::vector<std::string> violations;
  std::vector<std::string> notes;

  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Checks that A is binary without zero columns, that X is nonnegative and
/// holds 0 and every basis point rhs_scale·e_j, and the variant-specific
/// conditions (knapsack feasibility of e_j, generator representation, and
/// the per-coalition memberships of an indexed family).
AssumptionReport check_assumptions(const DomainSpec& d, const RatMatrix& a,
                                   const Rational& rhs_scale = Rational(1),
                                   std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace coregame

#endif  // COREGAME_DOMAIN_HPP
