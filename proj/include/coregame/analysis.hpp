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
#ifndef COREGAME_ANALYSIS_HPP
#define COREGAME_ANALYSIS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coregame/coalition.hpp"
#include "coregame/exact.hpp"
#include "coregame/game.hpp"

namespace coregame {

/// Verdict of a core characterization.
///
/// For the LP path nonempty ⇔ nu_grand = anchor_grand. Closed-form tests
/// fill closed_form_value with the quantity they compare against the
/// anchor instead. When the core is empty, relaxed_optimum is an optimal
/// point of the relaxation whose value no feasible point attains.
struct CoreReport {
  bool nonempty = false;
  std::optional<Rational> nu_grand;
  Rational anchor_grand;
  std::optional<Rational> closed_form_value;
  std::optional<RatVector> member;
  std::optional<Rational> gamma_min;
  std::optional<RatVector> relaxed_optimum;
  std::string theorem;
  std::vector<std::string> notes;
};

/// Decides core non-emptiness by comparing ν(1) with the relaxed LP value
/// under the governing theorem, and extracts a dual optimum as a member.
/// Throws kAssumptionViolated when the theorem's hypotheses fail.
CoreReport core_nonempty(const GameInstance& g);

/// True iff the core is nonempty and y is an optimal (rescaled) dual of
/// the grand-coalition relaxation.
bool is_core_member(const GameInstance& g, const RatVector& y);

struct MembershipCheck {
  bool member = false;
  std::optional<Coalition> violated;  // first coalition whose constraint fails
  std::string reason;
};

/// Checks y against every coalition: aᵀy ≥ ν(a) (≤ for covering games)
/// wherever ν(a) is defined, and 1ᵀy = ν(1).
MembershipCheck brute_force_membership(const GameInstance& g, const RatVector& y);

/// Same check against precomputed coalition values indexed by mask.
MembershipCheck brute_force_membership(const std::vector<std::optional<Rational>>& values,
                                       bool cost_game, const RatVector& y);

struct IntegralityReport {
  bool relax_has_integer_optimum = false;
  std::optional<RatVector> integer_optimum;
  bool core_nonempty = false;
  std::string converse_note;
};

/// Searches the relaxed LP's optimal face at the grand coalition for a 0/1
/// point. Requires a 0/1 domain.
IntegralityReport integrality_check(const GameInstance& g);

struct EquivalenceReport {
  ValueChain chain;
  bool original_test = false;       // original = anchor
  bool upper_equals_anchor = false;  // upper = anchor
  bool argmax_extension = false;     // some F-optimal x in X has f(x) = F(x)
  bool upper_test = false;           // both of the above
  bool lower_test = false;           // lower = anchor
  std::optional<RatVector> argmax_witness;
  bool consistent = false;  // all three tests agree
};

/// Runs the original, upper and lower characterizations at the grand
/// coalition.
EquivalenceReport equivalence_check(const GameInstance& g);

struct BondarevaReport {
  std::map<Coalition, Rational> coalition_values;
  std::vector<Coalition> infeasible;
  Rational lp_value;
  bool nonempty = false;
  std::optional<RatVector> member;
};

/// Ground truth independent of the relaxation: computes every ν(a) and
/// solves min 1ᵀy s.t. aᵀy ≥ ν(a) (max with ≤ for covering games), y free.
/// Coalitions with an infeasible sub-program are skipped.
BondarevaReport bondareva_oracle(const GameInstance& g, int max_players = 20);

/// max Σ ν(a)λ(a) s.t. Σ aλ(a) = w, λ ≥ 0 over nonempty feasible a (min for
/// covering games).
Rational tbc_value(const GameInstance& g, const Coalition& w, int max_players = 16);

struct GammaReport {
  Rational nu_grand;
  Rational anchor_grand;
  Rational gamma_min;
  RatVector member;  // in the γ-core for every γ ≥ gamma_min
};

/// gamma_min = anchor(1)/ν(1) for packing-sense games. Throws
/// kZeroGrandValue when ν(1) = 0.
GammaReport gamma_analysis(const GameInstance& g);

/// True iff y lies in the γ-core: 1ᵀy ≤ γ·ν(1) and aᵀy ≥ ν(a) for all a.
bool in_gamma_core(const GameInstance& g, const Rational& gamma, const RatVector& y);

struct SuperadditivityReport {
  bool superadditive = true;
  std::optional<Coalition> first;
  std::optional<Coalition> second;
};

/// Exhaustive check of ν(s ∪ t) ≥ ν(s) + ν(t) over disjoint pairs (≤ for
/// covering games), scanning unions from the grand coalition downward.
SuperadditivityReport superadditivity_probe(const GameInstance& g, int max_players = 12);

}  // namespace coregame

#endif  // COREGAME_ANALYSIS_HPP
