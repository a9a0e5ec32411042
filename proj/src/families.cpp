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
#include "coregame/families.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "coregame/error.hpp"

namespace coregame {

namespace {

constexpr int kMaxMatchingEdges = 30;
constexpr int kMaxCliqueEdges = 20;
constexpr int kMaxEnumerated = 24;
constexpr int kMaxSatVariables = 20;

void require(bool ok, ErrorKind kind, const std::string& message) {
  if (!ok) throw Error(kind, message);
}

void require_size(Eigen::Index got, Eigen::Index want, const char* what) {
  require(got == want, ErrorKind::kDimensionMismatch,
          std::string(what) + " has size " + std::to_string(got) + ", expected " +
              std::to_string(want));
}

// Fills the report from the anchor LP and compares with a closed-form value.
CoreReport closed_form_report(const GameInstance& g, const Rational& value, std::string theorem) {
  const LpSolution anchor = anchor_solution(g, Coalition::grand(g.players()));
  CoreReport r;
  r.theorem = std::move(theorem);
  r.anchor_grand = anchor.value;
  r.closed_form_value = value;
  r.nonempty = anchor.value == value;
  if (r.nonempty) {
    r.member = payoff_from_dual(g, anchor.dual);
  } else {
    r.relaxed_optimum = anchor.primal;
  }
  return r;
}

void check_symmetric_square(const RatMatrix& m, Eigen::Index n, const char* what) {
  require(m.rows() == n && m.cols() == n, ErrorKind::kDimensionMismatch,
          std::string(what) + " must be " + std::to_string(n) + "x" + std::to_string(n));
  require(is_symmetric(m), ErrorKind::kInvalidInput, std::string(what) + " must be symmetric");
}

}  // namespace

WeightedGraph make_graph(int vertices, std::vector<Edge> edges) {
  require(vertices >= 0 && vertices <= Coalition::kMaxPlayers, ErrorKind::kInvalidInput,
          "vertex count out of range");
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges) {
    require(e.u >= 0 && e.v >= 0 && e.u < vertices && e.v < vertices, ErrorKind::kInvalidInput,
            "edge endpoint out of range");
    require(e.u != e.v, ErrorKind::kInvalidInput, "loops are not allowed");
    require(seen.insert(std::minmax(e.u, e.v)).second, ErrorKind::kInvalidInput,
            "parallel edges are not allowed");
  }
  return WeightedGraph{vertices, std::move(edges)};
}

RatMatrix incidence_matrix(const WeightedGraph& graph) {
  RatMatrix a = RatMatrix::Zero(graph.vertices, graph.edge_count());
  for (int j = 0; j < graph.edge_count(); ++j) {
    a(graph.edges[j].u, j) = 1;
    a(graph.edges[j].v, j) = 1;
  }
  return a;
}

WeightedGraph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return make_graph(n, std::move(edges));
}

Rational max_weight_matching(const WeightedGraph& graph, const RatVector& weight,
                             const std::vector<bool>& allowed,
                             const std::vector<std::pair<int, int>>& conflicts) {
  const int m = graph.edge_count();
  require_size(weight.size(), m, "edge weight vector");
  require(m <= kMaxMatchingEdges, ErrorKind::kTooLarge,
          "matching search limited to " + std::to_string(kMaxMatchingEdges) + " edges");
  require(allowed.empty() || static_cast<int>(allowed.size()) == m, ErrorKind::kDimensionMismatch,
          "allowed mask does not match the edge count");
  std::vector<std::uint64_t> clash(static_cast<std::size_t>(m), 0);
  for (const auto& [i, j] : conflicts) {
    require(i >= 0 && j >= 0 && i < m && j < m, ErrorKind::kInvalidInput, "conflict out of range");
    clash[i] |= std::uint64_t{1} << j;
    clash[j] |= std::uint64_t{1} << i;
  }
  std::vector<int> order;
  for (int e = 0; e < m; ++e) {
    if ((allowed.empty() || allowed[e]) && weight(e).sign() > 0) order.push_back(e);
  }
  std::vector<Rational> tail(order.size() + 1, Rational(0));
  for (std::size_t k = order.size(); k-- > 0;) tail[k] = tail[k + 1] + weight(order[k]);

  Rational best(0);
  std::function<void(std::size_t, std::uint64_t, std::uint64_t, const Rational&)> search =
      [&](std::size_t k, std::uint64_t used_vertices, std::uint64_t chosen, const Rational& value) {
        if (value > best) best = value;
        if (k == order.size() || value + tail[k] <= best) return;
        const int e = order[k];
        const std::uint64_t ends = (std::uint64_t{1} << graph.edges[e].u) |
                                   (std::uint64_t{1} << graph.edges[e].v);
        if ((used_vertices & ends) == 0 && (clash[e] & chosen) == 0) {
          search(k + 1, used_vertices | ends, chosen | (std::uint64_t{1} << e), value + weight(e));
        }
        search(k + 1, used_vertices, chosen, value);
      };
  search(0, 0, 0, Rational(0));
  return best;
}

std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<bool>>& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  require(n <= 64, ErrorKind::kTooLarge, "clique enumeration limited to 64 vertices");
  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j && adjacency[i][j]) nbr[i] |= std::uint64_t{1} << j;
    }
  }
  std::vector<std::vector<int>> out;
  std::function<void(std::uint64_t, std::uint64_t, std::uint64_t)> expand =
      [&](std::uint64_t r, std::uint64_t p, std::uint64_t x) {
        if (p == 0 && x == 0) {
          std::vector<int> clique;
          for (int v = 0; v < n; ++v) {
            if ((r >> v) & 1U) clique.push_back(v);
          }
          out.push_back(std::move(clique));
          return;
        }
        // Pivot on the vertex of P ∪ X with the most neighbours in P.
        int pivot = -1;
        int most = -1;
        for (int u = 0; u < n; ++u) {
          if (((p | x) >> u) & 1U) {
            const int c = std::popcount(p & nbr[u]);
            if (c > most) most = c, pivot = u;
          }
        }
        std::uint64_t candidates = p & ~nbr[pivot];
        while (candidates != 0) {
          const int v = std::countr_zero(candidates);
          const std::uint64_t bit = std::uint64_t{1} << v;
          candidates &= candidates - 1;
          expand(r | bit, p & nbr[v], x & nbr[v]);
          p &= ~bit;
          x |= bit;
        }
      };
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  if (n > 0) expand(0, all, 0);
  return out;
}

GameInstance portfolio_game(const RatVector& mu, const RatMatrix& sigma, const Rational& gamma_risk) {
  const Eigen::Index n = mu.size();
  check_symmetric_square(sigma, n, "covariance");
  require(gamma_risk.sign() > 0, ErrorKind::kInvalidInput, "risk factor must be positive");
  require(all_nonnegative(sigma), ErrorKind::kAssumptionViolated,
          "negative correlation breaks individual subadditivity");
  const RatMatrix q = sigma * (-gamma_risk / Rational(2));
  return GameInstance(identity(n), GameSense::kPacking, boolean_domain(static_cast<int>(n)),
                      Objective::quadratic(mu, q));
}

CoreReport portfolio_core_closed_form(const RatVector& mu, const RatMatrix& sigma,
                                      const Rational& gamma_risk) {
  const GameInstance g = portfolio_game(mu, sigma, gamma_risk);
  const auto& quad = std::get<QuadraticObjective>(g.objective.node().kind);
  const Eigen::Index n = mu.size();
  RatVector adjusted(n);
  for (Eigen::Index i = 0; i < n; ++i) adjusted(i) = quad.b(i) + quad.q(i, i);
  CoreReport r;
  r.theorem = "portfolio closed form";
  r.anchor_grand = Rational(0);
  RatVector chosen = zeros(n);
  RatVector member = zeros(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (adjusted(i).sign() > 0) {
      chosen(i) = 1;
      member(i) = adjusted(i);
      r.anchor_grand += adjusted(i);
    }
  }
  r.closed_form_value = eval(g.objective, chosen);
  r.nonempty = true;
  for (Eigen::Index i = 0; i < n && r.nonempty; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (chosen(i).sign() > 0 && chosen(j).sign() > 0 && !quad.q(i, j).is_zero()) {
        r.nonempty = false;
        r.notes.push_back("assets " + std::to_string(i) + " and " + std::to_string(j) +
                          " both have positive adjusted return and are correlated");
        break;
      }
    }
  }
  if (r.nonempty) {
    r.member = member;
  } else {
    r.relaxed_optimum = chosen;
  }
  return r;
}

namespace {

void check_cut_weights(const RatMatrix& w) {
  check_symmetric_square(w, w.rows(), "weight matrix");
  require(all_nonnegative(w), ErrorKind::kInvalidInput, "cut weights must be nonnegative");
  for (Eigen::Index i = 0; i < w.rows(); ++i) {
    require(w(i, i).is_zero(), ErrorKind::kInvalidInput, "weight matrix needs a zero diagonal");
  }
}

}  // namespace

GameInstance maxcut_game(const RatMatrix& w) {
  check_cut_weights(w);
  const Eigen::Index n = w.rows();
  const RatVector degree = w * ones(n);
  return GameInstance(identity(n), GameSense::kPacking, boolean_domain(static_cast<int>(n)),
                      Objective::quadratic(degree, -w));
}

Rational max_cut_value(const RatMatrix& w) {
  check_cut_weights(w);
  const int n = static_cast<int>(w.rows());
  require(n <= kMaxEnumerated, ErrorKind::kTooLarge, "cut enumeration limited to 24 vertices");
  if (n < 2) return Rational(0);
  Rational best(0);
  // Vertex n-1 stays on the outside; each cut is seen once.
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << (n - 1)); ++s) {
    Rational cut(0);
    for (int i = 0; i < n; ++i) {
      if (!((s >> i) & 1U)) continue;
      for (int j = 0; j < n; ++j) {
        if (!((s >> j) & 1U)) cut += w(i, j);
      }
    }
    best = max(best, cut);
  }
  return best;
}

Rational maxcut_gamma(const RatMatrix& w) {
  const Rational total = sum(RatVector(w * ones(w.rows())));
  if (total.is_zero()) return Rational(1);
  return total / max_cut_value(w);
}

RatVector maxcut_member(const RatMatrix& w) {
  check_cut_weights(w);
  return w * ones(w.rows());
}

CoreReport maxcut_core_closed_form(const RatMatrix& w) {
  CoreReport r;
  r.theorem = "max cut closed form";
  const RatVector member = maxcut_member(w);
  r.anchor_grand = sum(member);
  r.nu_grand = max_cut_value(w);
  r.closed_form_value = r.nu_grand;
  r.nonempty = r.anchor_grand.is_zero();
  r.gamma_min = maxcut_gamma(w);
  if (r.nonempty) {
    r.member = member;
  } else {
    r.notes.push_back("W1 lies in the gamma-core for gamma = " + r.gamma_min->to_string());
  }
  return r;
}

GameInstance assortment_game(const RatVector& p, const RatVector& v) {
  const Eigen::Index n = p.size();
  require(n >= 2, ErrorKind::kInvalidInput, "assortment game needs at least two products");
  require_size(v.size(), n, "preference weights");
  for (Eigen::Index i = 0; i < n; ++i) {
    require(p(i).sign() > 0 && v(i).sign() > 0, ErrorKind::kInvalidInput,
            "prices and preference weights must be positive");
  }
  return GameInstance(identity(n), GameSense::kPacking, boolean_domain(static_cast<int>(n)),
                      Objective::ratio(p.cwiseProduct(v), v, Rational(1)));
}

AssortmentReport assortment_analysis(const RatVector& p, const RatVector& v) {
  assortment_game(p, v);  // validates
  const Eigen::Index n = p.size();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return p(a) > p(b); });
  AssortmentReport r;
  r.n_core_member = RatVector(n);
  r.anchor_grand = Rational(0);
  for (Eigen::Index i = 0; i < n; ++i) {
    r.n_core_member(i) = p(i) * v(i) / (Rational(1) + v(i));
    r.anchor_grand += r.n_core_member(i);
  }
  // An optimal assortment is revenue-ordered: a prefix of the price order.
  Rational revenue(0);
  Rational weight(1);
  r.nu_grand = Rational(0);
  for (const Eigen::Index i : order) {
    revenue += p(i) * v(i);
    weight += v(i);
    r.nu_grand = max(r.nu_grand, revenue / weight);
  }
  r.core_nonempty = r.nu_grand == r.anchor_grand;
  r.gamma_min = r.anchor_grand / r.nu_grand;
  return r;
}

CoreReport ratio_game_core_check(const GameInstance& g) {
  const auto* ratio = std::get_if<RatioObjective>(&g.objective.node().kind);
  require(ratio != nullptr, ErrorKind::kInvalidInput, "ratio game needs a ratio objective");
  require(std::holds_alternative<BooleanDomain>(g.domain.kind), ErrorKind::kInvalidInput,
          "ratio game needs the domain B^m");
  require(g.sense == GameSense::kPacking && g.rhs_scale == Rational(1), ErrorKind::kInvalidInput,
          "ratio game closed form covers unscaled packing games");
  const int m = g.dimension();
  require(m >= 2, ErrorKind::kAssumptionViolated, "ratio game closed form needs m >= 2");
  for (int i = 0; i < m; ++i) {
    require(ratio->c(i).sign() > 0, ErrorKind::kAssumptionViolated,
            "ratio game closed form needs c > 0");
  }
  require_valid(g);
  Rational single(0);
  std::vector<int> zero_d;
  for (int i = 0; i < m; ++i) {
    single = max(single, ratio->c(i) / (ratio->d0 + ratio->d(i)));
    if (ratio->d(i).is_zero()) zero_d.push_back(i);
  }
  const int k = static_cast<int>(zero_d.size());
  require(k <= kMaxEnumerated, ErrorKind::kTooLarge, "too many columns with d = 0");
  Rational linear(0);
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << k); ++s) {
    RatVector load = zeros(g.players());
    Rational value(0);
    for (int t = 0; t < k; ++t) {
      if (!((s >> t) & 1U)) continue;
      load += g.a.col(zero_d[t]);
      value += ratio->c(zero_d[t]) / ratio->d0;
    }
    bool fits = true;
    for (Eigen::Index i = 0; i < load.size() && fits; ++i) fits = load(i) <= Rational(1);
    if (fits) linear = max(linear, value);
  }
  return closed_form_report(g, max(single, linear), "ratio game closed form");
}

GameInstance quadratic_matching_game(const WeightedGraph& graph, const RatVector& b,
                                     const RatMatrix& q) {
  const int m = graph.edge_count();
  require_size(b.size(), m, "edge weight vector");
  check_symmetric_square(q, m, "interaction matrix");
  for (int i = 0; i < m; ++i) {
    require(q(i, i).is_zero(), ErrorKind::kInvalidInput, "interaction matrix needs a zero diagonal");
    for (int j = 0; j < m; ++j) {
      require(q(i, j).sign() <= 0, ErrorKind::kAssumptionViolated,
              "positive interaction breaks individual subadditivity");
    }
  }
  return GameInstance(incidence_matrix(graph), GameSense::kPacking, boolean_domain(m),
                      Objective::quadratic(b, q));
}

CoreReport qmatching_core_check(const WeightedGraph& graph, const RatVector& b, const RatMatrix& q) {
  const GameInstance g = quadratic_matching_game(graph, b, q);
  const int m = graph.edge_count();
  require(m <= kMaxCliqueEdges, ErrorKind::kTooLarge,
          "quadratic matching check limited to " + std::to_string(kMaxCliqueEdges) + " edges");
  std::vector<std::vector<bool>> compatible(static_cast<std::size_t>(m),
                                            std::vector<bool>(static_cast<std::size_t>(m), false));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) compatible[i][j] = i != j && q(i, j).is_zero();
  }
  Rational best(0);
  for (const std::vector<int>& clique : maximal_cliques(compatible)) {
    std::vector<bool> allowed(static_cast<std::size_t>(m), false);
    for (const int e : clique) allowed[e] = true;
    best = max(best, max_weight_matching(graph, b, allowed));
  }
  return closed_form_report(g, best, "quadratic matching closed form");
}

GameInstance ratio_matching_game(const WeightedGraph& graph, const RatVector& c, const RatVector& d,
                                 const Rational& d0) {
  const int m = graph.edge_count();
  require_size(c.size(), m, "numerator weights");
  require_size(d.size(), m, "denominator weights");
  for (int i = 0; i < m; ++i) {
    require(c(i).sign() > 0, ErrorKind::kAssumptionViolated, "ratio matching needs c > 0");
  }
  return GameInstance(incidence_matrix(graph), GameSense::kPacking, boolean_domain(m),
                      Objective::ratio(c, d, d0));
}

CoreReport rmatching_core_check(const WeightedGraph& graph, const RatVector& c, const RatVector& d,
                                const Rational& d0) {
  const GameInstance g = ratio_matching_game(graph, c, d, d0);
  require_valid(g);
  const int m = graph.edge_count();
  Rational single(0);
  std::vector<bool> keep(static_cast<std::size_t>(m), false);
  RatVector scaled(m);
  for (int e = 0; e < m; ++e) {
    single = max(single, c(e) / (d0 + d(e)));
    keep[e] = d(e).is_zero();
    scaled(e) = c(e) / d0;
  }
  const Rational matching = max_weight_matching(graph, scaled, keep);
  return closed_form_report(g, max(single, matching), "ratio matching closed form");
}

SatInstance parse_sat(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  SatInstance sat;
  int expected = -1;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string head;
    if (!(row >> head) || head[0] == 'c') continue;
    if (head == "p") {
      std::string format;
      row >> format >> sat.variables >> expected;
      require(format == "3b2sat" && row && sat.variables > 0 && expected >= 0,
              ErrorKind::kInvalidInput, "bad header, expected 'p 3b2sat n k'");
      continue;
    }
    require(expected >= 0, ErrorKind::kInvalidInput, "clause before 'p 3b2sat' header");
    std::array<int, 3> clause{};
    std::istringstream lits(line);
    for (int& lit : clause) {
      require(static_cast<bool>(lits >> lit), ErrorKind::kInvalidInput,
              "clause needs three literals: " + line);
      require(lit != 0 && std::abs(lit) <= sat.variables, ErrorKind::kInvalidInput,
              "literal out of range: " + line);
    }
    int trailing = 0;
    require(!(lits >> trailing) || trailing == 0, ErrorKind::kInvalidInput,
            "clause has more than three literals: " + line);
    sat.clauses.push_back(clause);
  }
  require(expected >= 0, ErrorKind::kInvalidInput, "missing 'p 3b2sat' header");
  require(static_cast<int>(sat.clauses.size()) == expected, ErrorKind::kInvalidInput,
          "header announces " + std::to_string(expected) + " clauses, found " +
              std::to_string(sat.clauses.size()));
  return sat;
}

void validate_3b2(const SatInstance& sat) {
  std::vector<int> positive(static_cast<std::size_t>(sat.variables) + 1, 0);
  std::vector<int> negative(static_cast<std::size_t>(sat.variables) + 1, 0);
  for (const auto& clause : sat.clauses) {
    for (const int lit : clause) {
      require(lit != 0 && std::abs(lit) <= sat.variables, ErrorKind::kNot3B2,
              "literal " + std::to_string(lit) + " out of range");
      ++(lit > 0 ? positive : negative)[static_cast<std::size_t>(std::abs(lit))];
    }
  }
  for (int i = 1; i <= sat.variables; ++i) {
    require(positive[i] == 2 && negative[i] == 2, ErrorKind::kNot3B2,
            "variable " + std::to_string(i) + " occurs " + std::to_string(positive[i]) +
                " times positively and " + std::to_string(negative[i]) + " times negatively");
  }
}

bool satisfiable(const SatInstance& sat) {
  require(sat.variables <= kMaxSatVariables, ErrorKind::kTooLarge,
          "satisfiability check limited to 20 variables");
  for (std::uint64_t assignment = 0; assignment < (std::uint64_t{1} << sat.variables);
       ++assignment) {
    const bool all = std::all_of(sat.clauses.begin(), sat.clauses.end(), [&](const auto& clause) {
      return std::any_of(clause.begin(), clause.end(), [&](int lit) {
        const bool value = (assignment >> (std::abs(lit) - 1)) & 1U;
        return lit > 0 ? value : !value;
      });
    });
    if (all) return true;
  }
  return false;
}

ConflictStructure sat_reduction(const SatInstance& sat) {
  validate_3b2(sat);
  const int n = sat.variables;
  const int k = static_cast<int>(sat.clauses.size());
  std::vector<Edge> edges;
  ConflictStructure cs;
  // Cycle a-b-c-d-a per variable: x_i1 = ab, x̄_i1 = bc, x_i2 = cd, x̄_i2 = da.
  // Cycle edge of (literal sign, copy) for variable i sits at 4i + offset.
  auto cycle_edge = [](int i, bool positive, int copy) {
    return 4 * i + (positive ? 0 : 1) + 2 * copy;
  };
  for (int i = 0; i < n; ++i) {
    const int a = 4 * i;
    const std::string v = std::to_string(i + 1);
    edges.push_back({a, a + 1});
    cs.edge_names.push_back("x" + v + "_1");
    edges.push_back({a + 1, a + 2});
    cs.edge_names.push_back("~x" + v + "_1");
    edges.push_back({a + 2, a + 3});
    cs.edge_names.push_back("x" + v + "_2");
    edges.push_back({a + 3, a});
    cs.edge_names.push_back("~x" + v + "_2");
  }
  // used[i][sign] counts how many claw edges already carry that literal.
  std::vector<std::array<int, 2>> used(static_cast<std::size_t>(n), {0, 0});
  for (int j = 0; j < k; ++j) {
    const int root = 4 * n + 4 * j;
    for (int t = 0; t < 3; ++t) {
      const int lit = sat.clauses[j][t];
      const int i = std::abs(lit) - 1;
      const bool positive = lit > 0;
      const int copy = used[i][positive ? 0 : 1]++;
      const int claw = static_cast<int>(edges.size());
      edges.push_back({root, root + 1 + t});
      cs.edge_names.push_back("e(" + cs.edge_names[cycle_edge(i, positive, copy)] + ")");
      // The claw edge for a literal clashes with the cycle edge of its negation.
      cs.conflicts.emplace_back(cycle_edge(i, !positive, copy), claw);
    }
  }
  cs.graph = make_graph(4 * n + 4 * k, std::move(edges));
  return cs;
}

GameInstance sat_matching_game(const ConflictStructure& cs) {
  const int m = cs.graph.edge_count();
  RatMatrix q = RatMatrix::Zero(m, m);
  for (const auto& [i, j] : cs.conflicts) {
    q(i, j) = -1;
    q(j, i) = -1;
  }
  return quadratic_matching_game(cs.graph, ones(m), q);
}

ReductionCheck verify_reduction(const SatInstance& sat) {
  const ConflictStructure cs = sat_reduction(sat);
  ReductionCheck r;
  const Rational best =
      max_weight_matching(cs.graph, ones(cs.graph.edge_count()), {}, cs.conflicts);
  r.max_conflict_matching = std::stoi(best.to_string());
  r.target = 2 * sat.variables + static_cast<int>(sat.clauses.size());
  r.satisfiable = satisfiable(sat);
  r.consistent = (r.max_conflict_matching == r.target) == r.satisfiable;
  return r;
}

}  // namespace coregame
