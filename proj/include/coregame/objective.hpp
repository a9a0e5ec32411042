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
#ifndef COREGAME_OBJECTIVE_HPP
#define COREGAME_OBJECTIVE_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "coregame/coalition.hpp"
#include "coregame/domain.hpp"
#include "coregame/exact.hpp"

namespace coregame {

struct ObjectiveNode;

/// An objective f: X → Q (or f: X × B^n → Q for coalition-dependent
/// tables). Immutable and cheap to copy. Every constructor validates that f
/// is grounded, f(0) = 0.
class Objective {
 public:
  /// cᵀx.
  static Objective linear(RatVector c);
  /// bᵀx + xᵀQx with symmetric Q.
  static Objective quadratic(RatVector b, RatMatrix q);
  /// cᵀx / (d0 + dᵀx) with c, d ≥ 0 and d0 > 0.
  static Objective ratio(RatVector c, RatVector d, Rational d0);
  /// Explicit values; the origin defaults to 0 when absent.
  static Objective table(int m, const std::vector<std::pair<RatVector, Rational>>& entries);
  /// α·inner with α ≥ 0.
  static Objective scaled(Rational alpha, Objective inner);
  static Objective sum(std::vector<Objective> terms);
  static Objective max(Objective first, Objective second);
  /// x ↦ inner(Mx).
  static Objective precomposed(RatMatrix m, Objective inner);
  /// f(x, w) given per (point, coalition); f(0, w) defaults to 0.
  static Objective coalition_dependent(
      int m, const std::vector<std::tuple<RatVector, Coalition, Rational>>& entries);

  int dimension() const;
  bool depends_on_coalition() const;
  const ObjectiveNode& node() const { return *node_; }
  /// Non-fatal remarks collected during validation.
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  explicit Objective(std::shared_ptr<const ObjectiveNode> node);
  void validate_grounded() const;

  std::shared_ptr<const ObjectiveNode> node_;
  std::vector<std::string> warnings_;
};

struct LinearObjective {
  RatVector c;
};
struct QuadraticObjective {
  RatVector b;
  RatMatrix q;
};
struct RatioObjective {
  RatVector c;
  RatVector d;
  Rational d0;
};
struct TableObjective {
  int m = 0;
  std::map<std::vector<Rational>, Rational> values;
};
struct ScaledObjective {
  Rational alpha;
  Objective inner;
};
struct SumObjective {
  std::vector<Objective> terms;
};
struct MaxObjective {
  Objective first;
  Objective second;
};
struct PrecomposedObjective {
  RatMatrix m;
  Objective inner;
};
struct CoalitionDependentObjective {
  int m = 0;
  std::map<std::pair<std::vector<Rational>, Coalition>, Rational> values;
};

struct ObjectiveNode {
  std::variant<LinearObjective, QuadraticObjective, RatioObjective, TableObjective,
               ScaledObjective, SumObjective, MaxObjective, PrecomposedObjective,
               CoalitionDependentObjective>
      kind;
};

const char* kind_name(const Objective& f);

/// Exact f(x), or f(x, w) for coalition-dependent objectives. Throws
/// kUndefinedPoint on a table miss and kInvalidInput when w is required but
/// absent.
Rational eval(const Objective& f, const RatVector& x,
              const std::optional<Coalition>& w = std::nullopt);

enum class RelaxationKind { kStandard, kBScaled, kQGenerator, kADependent };

const char* to_string(RelaxationKind kind);

struct RelaxationContext {
  std::optional<RatMatrix> a;           // required for kADependent
  std::optional<RatMatrix> generators;  // required for kQGenerator
  std::optional<Rational> rhs_scale;    // required for kBScaled
};

/// Coefficients of the basis-linear relaxation F.
struct BasisCoefficients {
  RatVector coeffs;
  RelaxationKind kind = RelaxationKind::kStandard;
  std::optional<RatMatrix> pseudo_inverse;  // Q†, generator variant only
};

/// standard: (f(e_1), …, f(e_m)); b-scaled: b⁻¹(f(b·e_1), …); generator:
/// (f(q_1), …, f(q_k)) with Q†; A-dependent: (f(e_1, A·e_1), …).
BasisCoefficients basis_coefficients(const Objective& f, RelaxationKind kind,
                                     const RelaxationContext& ctx = {});

/// F(x): coeffsᵀx, or coeffsᵀQ†x for generators.
Rational relaxation_value(const BasisCoefficients& bc, const RatVector& x);

struct IsVerdict {
  bool holds = true;
  std::optional<RatVector> witness;           // a point with f(x) > F(x)
  std::optional<Coalition> witness_coalition;  // A-dependent variant only
  std::vector<std::string> notes;
};

/// Checks f(x) ≤ F(x) on every point of the domain. For a coalition-indexed
/// domain every listed X(w) is scanned. The A-dependent variant scans the
/// pairs (x, w) with x ∈ X(w) and Ax ≤ w, and reports non-monotonicity of
/// f in w as a note.
IsVerdict is_individually_subadditive(const Objective& f, const DomainSpec& d,
                                      RelaxationKind kind = RelaxationKind::kStandard,
                                      const RelaxationContext& ctx = {},
                                      std::uint64_t cap = kDefaultEnumerationCap);

/// Same scan with the inequality reversed: f(x) ≥ F(x).
IsVerdict is_individually_superadditive(const Objective& f, const DomainSpec& d,
                                        RelaxationKind kind = RelaxationKind::kStandard,
                                        const RelaxationContext& ctx = {},
                                        std::uint64_t cap = kDefaultEnumerationCap);

struct ClassVerdicts {
  bool individually_subadditive = false;
  bool subadditive = false;
  bool submodular = false;
  bool grand_fractionally_subadditive = false;
  bool fractionally_subadditive = false;
  bool monotone = false;
  std::map<std::string, std::string> witnesses;  // class name -> violation
};

inline constexpr int kDefaultClassCheckLimit = 12;

/// Exhaustive verdicts for f as a set function on B^m.
ClassVerdicts class_checks(const Objective& f, int max_m = kDefaultClassCheckLimit);

enum class QuadraticDomainKind { kBoolean, kBox, kOrthant, kFullSpace };

const char* to_string(QuadraticDomainKind kind);

/// Closed-form individual subadditivity of bᵀx + xᵀQx: off-diagonals ≤ 0 on
/// B^m; additionally a nonnegative diagonal on [0,1]^m, a zero diagonal on
/// the orthant; Q = 0 on the whole space.
bool quadratic_is_characterization(QuadraticDomainKind kind, const RatVector& b,
                                   const RatMatrix& q);

}  // namespace coregame

#endif  // COREGAME_OBJECTIVE_HPP
