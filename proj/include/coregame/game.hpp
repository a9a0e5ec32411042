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
#ifndef COREGAME_GAME_HPP
#define COREGAME_GAME_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coregame/coalition.hpp"
#include "coregame/domain.hpp"
#include "coregame/exact.hpp"
#include "coregame/lp.hpp"
#include "coregame/objective.hpp"

namespace coregame {

/// packing: max f(x) s.t. Ax ≤ b·w; covering: min f(x) s.t. Ax ≥ b·w;
/// partition: max f(x) s.t. Ax = b·w.
enum class GameSense { kPacking, kCovering, kPartition };

/// Which core characterization governs an instance.
enum class TheoremVariant {
  kPacking,
  kCovering,
  kPartition,
  kGenerator,
  kIndexedDomain,
  kScaledRhs,
  kPlayerObjective,
};

const char* to_string(GameSense sense);
const char* to_string(TheoremVariant variant);

/// ν(w) = opt { f(x) : x ∈ X(w), Ax (≤|≥|=) b·w } for coalitions w ∈ B^n.
struct GameInstance {
  GameInstance(RatMatrix a, GameSense sense, DomainSpec domain, Objective objective,
               Rational rhs_scale = Rational(1));

  RatMatrix a;
  GameSense sense;
  DomainSpec domain;
  Objective objective;
  Rational rhs_scale;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;

  int players() const { return static_cast<int>(a.rows()); }
  int dimension() const { return static_cast<int>(a.cols()); }
  bool maximizes() const { return sense != GameSense::kCovering; }
};

/// Throws kInvalidInput for combinations no characterization covers (for
/// example a covering game over generator cones).
TheoremVariant theorem_variant(const GameInstance& g);

/// Coefficients of the relaxation F used by the governing theorem.
BasisCoefficients relaxation(const GameInstance& g);

/// Domain assumptions plus the matching individual sub-/superadditivity.
AssumptionReport validate(const GameInstance& g);

/// Throws kAssumptionViolated with the report summary if validate() fails.
void require_valid(const GameInstance& g);

/// ν(w), or nullopt when no point of X(w) is feasible.
std::optional<Rational> try_nu(const GameInstance& g, const Coalition& w);

/// ν(w). Throws kInfeasibleSubprogram when the sub-program has no point.
Rational nu(const GameInstance& g, const Coalition& w);

/// Every optimal point of the sub-program at w.
std::vector<RatVector> nu_optimizers(const GameInstance& g, const Coalition& w);

/// Visits every feasible point of the sub-program at w with its f-value.
void for_each_feasible(const GameInstance& g, const Coalition& w,
                       const std::function<void(const RatVector&, const Rational&)>& visit);

/// ν for all 2^n coalitions, indexed by mask; nullopt marks infeasibility.
std::vector<std::optional<Rational>> nu_all(const GameInstance& g);

/// The relaxed linear program at w. For generator cones the variables are
/// the cone coordinates z with constraint matrix A·Q.
LpProblem anchor_lp(const GameInstance& g, const Coalition& w);

/// Solves anchor_lp. Throws kSolverStatus unless optimal.
LpSolution anchor_solution(const GameInstance& g, const Coalition& w);

Rational anchor_value(const GameInstance& g, const Coalition& w);

/// The payoff vector carried by an anchor dual: y itself, or b·y when the
/// right-hand side is scaled by b.
RatVector payoff_from_dual(const GameInstance& g, const RatVector& dual);

/// Points x with f(x) = F(x). For coalition-indexed domains and
/// coalition-dependent objectives the set is taken at w.
std::vector<RatVector> extension_points(const GameInstance& g,
                                        const std::optional<Coalition>& w = std::nullopt);

/// anchor (LP), upper (F over X), original (f over X), lower (F over the
/// extension points). Packing and partition: anchor ≥ upper ≥ original ≥
/// lower; covering reverses every inequality. lower is nullopt when no
/// extension point is feasible.
struct ValueChain {
  Rational anchor;
  Rational upper;
  Rational original;
  std::optional<Rational> lower;
};

/// Throws kAssumptionViolated if the computed values break the ordering.
ValueChain value_chain(const GameInstance& g, const Coalition& w);

}  // namespace coregame

#endif  // COREGAME_GAME_HPP
