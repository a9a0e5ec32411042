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
#ifndef COREGAME_FAMILIES_HPP
#define COREGAME_FAMILIES_HPP

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coregame/analysis.hpp"
#include "coregame/exact.hpp"
#include "coregame/game.hpp"

namespace coregame {

struct Edge {
  int u = 0;
  int v = 0;
};

/// Simple undirected graph. Players are vertices, variables are edges.
struct WeightedGraph {
  int vertices = 0;
  std::vector<Edge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Throws kInvalidInput on loops, parallel edges or out-of-range endpoints.
WeightedGraph make_graph(int vertices, std::vector<Edge> edges);

/// Vertex-by-edge 0/1 matrix.
RatMatrix incidence_matrix(const WeightedGraph& graph);

/// The complete graph on n vertices.
WeightedGraph complete_graph(int n);

/// Maximum total weight of a matching that uses only edges with allowed[e]
/// and contains no conflicting pair. Exhaustive; at most 30 edges.
Rational max_weight_matching(const WeightedGraph& graph, const RatVector& weight,
                             const std::vector<bool>& allowed = {},
                             const std::vector<std::pair<int, int>>& conflicts = {});

/// Maximal cliques by Bron–Kerbosch with pivoting. adjacency must be
/// symmetric with a false diagonal.
std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<bool>>& adjacency);

// Portfolio selection: f(x) = μᵀx − (γ/2) xᵀΣx, A = I, X = B^n.

GameInstance portfolio_game(const RatVector& mu, const RatMatrix& sigma, const Rational& gamma_risk);

/// Nonempty iff no two assets with positive risk-adjusted return are
/// correlated; the unique member is the positive part of those returns.
CoreReport portfolio_core_closed_form(const RatVector& mu, const RatMatrix& sigma,
                                      const Rational& gamma_risk);

// Max cut: f(x) = (W1)ᵀx − xᵀWx, A = I, X = B^n.

GameInstance maxcut_game(const RatMatrix& w);

/// Maximum cut weight by enumerating cuts.
Rational max_cut_value(const RatMatrix& w);

/// 1ᵀW1 / maxcut(W); 1 for the edgeless graph, whose core is {0}.
Rational maxcut_gamma(const RatMatrix& w);

/// W·1, which lies in the γ-core for γ = maxcut_gamma(W).
RatVector maxcut_member(const RatMatrix& w);

CoreReport maxcut_core_closed_form(const RatMatrix& w);

// Assortment under multinomial logit: f(x) = Σ p_i v_i x_i / (1 + Σ v_i x_i).

GameInstance assortment_game(const RatVector& p, const RatVector& v);

struct AssortmentReport {
  bool core_nonempty = false;
  Rational nu_grand;
  Rational anchor_grand;
  Rational gamma_min;
  RatVector n_core_member;  // p_i v_i / (1 + v_i)
};

AssortmentReport assortment_analysis(const RatVector& p, const RatVector& v);

/// Core test for a ratio game over B^m: the anchor must equal the better of
/// the best single variable and the best linear solution on {i : d_i = 0}.
CoreReport ratio_game_core_check(const GameInstance& g);

// Matching games on a graph; A is the incidence matrix.

GameInstance quadratic_matching_game(const WeightedGraph& graph, const RatVector& b,
                                     const RatMatrix& q);

/// Compares the anchor with the best matching inside a maximal clique of
/// the conflict-free graph on edges. At most 20 edges.
CoreReport qmatching_core_check(const WeightedGraph& graph, const RatVector& b,
                                const RatMatrix& q);

GameInstance ratio_matching_game(const WeightedGraph& graph, const RatVector& c,
                                 const RatVector& d, const Rational& d0);

/// Compares the anchor with the better of the best single edge ratio and
/// the best matching on edges with d_e = 0 weighted by c/d0.
CoreReport rmatching_core_check(const WeightedGraph& graph, const RatVector& c,
                                const RatVector& d, const Rational& d0);

// 3-SAT where every variable occurs exactly twice positively and twice
// negatively. Literals are ±(1..n).

struct SatInstance {
  int variables = 0;
  std::vector<std::array<int, 3>> clauses;
};

/// Reads "p 3b2sat n k" followed by k lines of three literals. Lines
/// starting with 'c' are comments.
SatInstance parse_sat(std::string_view text);

/// Throws kNot3B2 unless every variable occurs twice with each sign.
void validate_3b2(const SatInstance& sat);

bool satisfiable(const SatInstance& sat);

struct ConflictStructure {
  WeightedGraph graph;
  std::vector<std::string> edge_names;
  std::vector<std::pair<int, int>> conflicts;  // edge index pairs
};

/// One 4-cycle x_i1, x̄_i1, x_i2, x̄_i2 per variable, one claw per clause,
/// and conflicts between each cycle edge and the claw edge of its negation.
ConflictStructure sat_reduction(const SatInstance& sat);

/// The quadratic matching game with b = 1 and q = −1 on conflicts.
GameInstance sat_matching_game(const ConflictStructure& cs);

struct ReductionCheck {
  int max_conflict_matching = 0;
  int target = 0;  // 2n + k
  bool satisfiable = false;
  bool consistent = false;  // matching reaches target iff satisfiable
};

ReductionCheck verify_reduction(const SatInstance& sat);

}  // namespace coregame

#endif  // COREGAME_FAMILIES_HPP
