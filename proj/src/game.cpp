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
#include "coregame/game.hpp"

#include <algorithm>
#include <functional>

namespace coregame {

const char* to_string(GameSense sense) {
  switch (sense) {
    case GameSense::kPacking: return "packing";
    case GameSense::kCovering: return "covering";
    case GameSense::kPartition: return "partition";
  }
  return "unknown";
}

const char* to_string(TheoremVariant variant) {
  switch (variant) {
    case TheoremVariant::kPacking: return "packing";
    case TheoremVariant::kCovering: return "covering";
    case TheoremVariant::kPartition: return "partition";
    case TheoremVariant::kGenerator: return "generator_cone";
    case TheoremVariant::kIndexedDomain: return "coalition_indexed_domain";
    case TheoremVariant::kScaledRhs: return "scaled_rhs";
    case TheoremVariant::kPlayerObjective: return "player_dependent_objective";
  }
  return "unknown";
}

GameInstance::GameInstance(RatMatrix a_in, GameSense sense_in, DomainSpec domain_in,
                           Objective objective_in, Rational rhs_scale_in)
    : a(std::move(a_in)),
      sense(sense_in),
      domain(std::move(domain_in)),
      objective(std::move(objective_in)),
      rhs_scale(std::move(rhs_scale_in)) {
  if (coregame::dimension(domain) != a.cols() || objective.dimension() != a.cols()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "A, the domain and the objective must agree on the number of variables");
  }
  if (rhs_scale.sign() <= 0) {
    throw Error(ErrorKind::kInvalidInput, "right-hand side scale must be positive");
  }
  if (a.rows() > Coalition::kMaxPlayers) {
    throw Error(ErrorKind::kTooLarge, "too many players");
  }
}

TheoremVariant theorem_variant(const GameInstance& g) {
  const bool cone = std::holds_alternative<GeneratorCone>(g.domain.kind);
  const bool indexed = std::holds_alternative<CoalitionIndexed>(g.domain.kind);
  const bool scaled = g.rhs_scale != Rational(1);
  const bool player = g.objective.depends_on_coalition();
  const int specials = int{cone} + int{indexed} + int{scaled} + int{player};
  if (specials > 1 || (specials == 1 && g.sense != GameSense::kPacking)) {
    throw Error(ErrorKind::kInvalidInput,
                "no characterization covers this combination of sense, domain, scale and "
                "objective");
  }
  if (cone) return TheoremVariant::kGenerator;
  if (indexed) return TheoremVariant::kIndexedDomain;
  if (scaled) return TheoremVariant::kScaledRhs;
  if (player) return TheoremVariant::kPlayerObjective;
  switch (g.sense) {
    case GameSense::kPacking: return TheoremVariant::kPacking;
    case GameSense::kCovering: return TheoremVariant::kCovering;
    case GameSense::kPartition: return TheoremVariant::kPartition;
  }
  return TheoremVariant::kPacking;
}

namespace {

RelaxationKind relaxation_kind(TheoremVariant v) {
  switch (v) {
    case TheoremVariant::kGenerator: return RelaxationKind::kQGenerator;
    case TheoremVariant::kScaledRhs: return RelaxationKind::kBScaled;
    case TheoremVariant::kPlayerObjective: return RelaxationKind::kADependent;
    default: return RelaxationKind::kStandard;
  }
}

RelaxationContext context_of(const GameInstance& g) {
  RelaxationContext ctx;
  ctx.a = g.a;
  ctx.rhs_scale = g.rhs_scale;
  if (const RatMatrix* q = generators(g.domain)) ctx.generators = *q;
  return ctx;
}

// Whether Ax relates to b·w as the sense demands.
bool feasible(const GameInstance& g, const RatVector& ax, const Coalition& w) {
  for (int i = 0; i < g.players(); ++i) {
    const Rational rhs = w.contains(i) ? g.rhs_scale : Rational(0);
    switch (g.sense) {
      case GameSense::kPacking: if (ax(i) > rhs) return false; break;
      case GameSense::kCovering: if (ax(i) < rhs) return false; break;
      case GameSense::kPartition: if (ax(i) != rhs) return false; break;
    }
  }
  return true;
}

bool better(const GameInstance& g, const Rational& candidate, const Rational& incumbent) {
  return g.maximizes() ? candidate > incumbent : candidate < incumbent;
}

void check_players(const GameInstance& g, const Coalition& w) {
  if (w.players() != g.players()) {
    throw Error(ErrorKind::kDimensionMismatch, "coalition " + w.to_string() + " has " +
                                                   std::to_string(w.players()) + " players, game has " +
                                                   std::to_string(g.players()));
  }
}

}  // namespace

void for_each_feasible(const GameInstance& g, const Coalition& w,
                       const std::function<void(const RatVector&, const Rational&)>& visit) {
  const DomainSpec& xw = domain_for(g.domain, w);
  const bool player = g.objective.depends_on_coalition();
  for_each_point(xw, g.enumeration_cap, [&](const RatVector& x) {
    const RatVector ax = g.a * x;
    if (!feasible(g, ax, w)) return;
    visit(x, player ? eval(g.objective, x, w) : eval(g.objective, x));
  });
}

BasisCoefficients relaxation(const GameInstance& g) {
  return basis_coefficients(g.objective, relaxation_kind(theorem_variant(g)), context_of(g));
}

AssumptionReport validate(const GameInstance& g) {
  AssumptionReport report;
  TheoremVariant variant;
  try {
    variant = theorem_variant(g);
  } catch (const Error& e) {
    report.violations.push_back(e.what());
    return report;
  }
  report = check_assumptions(g.domain, g.a, g.rhs_scale, g.enumeration_cap);
  if (!report.ok()) return report;
  for (const auto& w : g.objective.warnings()) report.notes.push_back(w);
  const RelaxationKind kind = relaxation_kind(variant);
  const RelaxationContext ctx = context_of(g);
  if (g.sense == GameSense::kCovering) {
    const IsVerdict v =
        is_individually_superadditive(g.objective, g.domain, kind, ctx, g.enumeration_cap);
    if (!v.holds) {
      report.violations.push_back("objective is not individually superadditive: f < F at " +
                                  to_string(*v.witness));
    }
  } else {
    const IsVerdict v =
        is_individually_subadditive(g.objective, g.domain, kind, ctx, g.enumeration_cap);
    if (!v.holds) {
      std::string where = to_string(*v.witness);
      if (v.witness_coalition) where += " with w = " + v.witness_coalition->to_string();
      report.violations.push_back(std::string("objective is not ") +
                                  (kind == RelaxationKind::kStandard ? "" : to_string(kind)) +
                                  (kind == RelaxationKind::kStandard ? "" : " ") +
                                  "individually subadditive: f > F at " + where);
    }
    for (const auto& note : v.notes) {
      report.violations.push_back("objective is not monotone in the coalition: " + note);
    }
  }
  return report;
}

void require_valid(const GameInstance& g) {
  const AssumptionReport report = validate(g);
  if (!report.ok()) throw Error(ErrorKind::kAssumptionViolated, report.summary());
}

std::optional<Rational> try_nu(const GameInstance& g, const Coalition& w) {
  check_players(g, w);
  std::optional<Rational> best;
  for_each_feasible(g, w, [&](const RatVector&, const Rational& fx) {
    if (!best || better(g, fx, *best)) best = fx;
  });
  return best;
}

Rational nu(const GameInstance& g, const Coalition& w) {
  auto v = try_nu(g, w);
  if (!v) {
    throw Error(ErrorKind::kInfeasibleSubprogram,
                "no feasible point for coalition " + w.to_string());
  }
  return *v;
}

std::vector<RatVector> nu_optimizers(const GameInstance& g, const Coalition& w) {
  const Rational value = nu(g, w);
  std::vector<RatVector> out;
  for_each_feasible(g, w, [&](const RatVector& x, const Rational& fx) {
    if (fx == value) out.push_back(x);
  });
  return out;
}

std::vector<std::optional<Rational>> nu_all(const GameInstance& g) {
  const int n = g.players();
  const std::uint64_t total = coalition_count(n);
  std::vector<std::optional<Rational>> best(total);
  const bool per_coalition = std::holds_alternative<CoalitionIndexed>(g.domain.kind) ||
                             g.objective.depends_on_coalition();
  if (per_coalition) {
    for (std::uint64_t mask = 0; mask < total; ++mask) best[mask] = try_nu(g, Coalition(n, mask));
    return best;
  }
  auto offer = [&](std::uint64_t mask, const Rational& v) {
    if (!best[mask] || better(g, v, *best[mask])) best[mask] = v;
  };
  // Each point is feasible for an interval of coalitions; record it at the
  // extreme coalition and propagate along the lattice.
  for_each_point(g.domain, g.enumeration_cap, [&](const RatVector& x) {
    const RatVector ax = g.a * x;
    const Rational fx = eval(g.objective, x);
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      switch (g.sense) {
        case GameSense::kPacking:
          if (ax(i) > g.rhs_scale) return;
          if (ax(i).sign() > 0) mask |= bit;
          break;
        case GameSense::kCovering:
          if (ax(i) >= g.rhs_scale) mask |= bit;
          break;
        case GameSense::kPartition:
          if (ax(i) == g.rhs_scale) mask |= bit;
          else if (!ax(i).is_zero()) return;
          break;
      }
    }
    offer(mask, fx);
  });
  if (g.sense == GameSense::kPacking) {
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        if ((mask & bit) && best[mask ^ bit]) offer(mask, *best[mask ^ bit]);
      }
    }
  } else if (g.sense == GameSense::kCovering) {
    for (int i = 0; i < n; ++i) {
      const std::uint64_t bit = std::uint64_t{1} << i;
      for (std::uint64_t mask = 0; mask < total; ++mask) {
        if ((mask & bit) && best[mask]) offer(mask ^ bit, *best[mask]);
      }
    }
  }
  return best;
}

LpProblem anchor_lp(const GameInstance& g, const Coalition& w) {
  check_players(g, w);
  const BasisCoefficients bc = relaxation(g);
  LpProblem p;
  p.sense = g.maximizes() ? LpSense::kMaximize : LpSense::kMinimize;
  p.c = bc.coeffs;
  if (const RatMatrix* q = generators(g.domain)) {
    p.a = g.a * (*q);
  } else {
    p.a = g.a;
  }
  const RowSense row = g.sense == GameSense::kPacking    ? RowSense::kLe
                       : g.sense == GameSense::kCovering ? RowSense::kGe
                                                         : RowSense::kEq;
  p.row_sense.assign(static_cast<std::size_t>(g.players()), row);
  p.rhs = w.to_vector() * g.rhs_scale;
  return p;
}

LpSolution anchor_solution(const GameInstance& g, const Coalition& w) {
  LpSolution sol = solve(anchor_lp(g, w));
  if (sol.status != LpStatus::kOptimal) {
    throw Error(ErrorKind::kSolverStatus, std::string("relaxed LP at ") + w.to_string() + " is " +
                                              to_string(sol.status));
  }
  return sol;
}

Rational anchor_value(const GameInstance& g, const Coalition& w) {
  return anchor_solution(g, w).value;
}

RatVector payoff_from_dual(const GameInstance& g, const RatVector& dual) {
  return dual * g.rhs_scale;
}

std::vector<RatVector> extension_points(const GameInstance& g, const std::optional<Coalition>& w) {
  const BasisCoefficients bc = relaxation(g);
  const bool player = g.objective.depends_on_coalition();
  const bool indexed = std::holds_alternative<CoalitionIndexed>(g.domain.kind);
  if ((player || indexed) && !w) {
    throw Error(ErrorKind::kInvalidInput, "extension points of this instance depend on w");
  }
  const DomainSpec& d = indexed ? domain_for(g.domain, *w) : g.domain;
  std::vector<RatVector> out;
  for_each_point(d, g.enumeration_cap, [&](const RatVector& x) {
    const Rational fx = player ? eval(g.objective, x, w) : eval(g.objective, x);
    if (fx == relaxation_value(bc, x)) out.push_back(x);
  });
  return out;
}

ValueChain value_chain(const GameInstance& g, const Coalition& w) {
  const BasisCoefficients bc = relaxation(g);
  ValueChain chain;
  chain.anchor = anchor_value(g, w);
  std::optional<Rational> upper;
  std::optional<Rational> original;
  for_each_feasible(g, w, [&](const RatVector& x, const Rational& fx) {
    const Rational big_f = relaxation_value(bc, x);
    if (!upper || better(g, big_f, *upper)) upper = big_f;
    if (!original || better(g, fx, *original)) original = fx;
    if (fx == big_f && (!chain.lower || better(g, big_f, *chain.lower))) chain.lower = big_f;
  });
  if (!original) {
    throw Error(ErrorKind::kInfeasibleSubprogram,
                "no feasible point for coalition " + w.to_string());
  }
  chain.upper = *upper;
  chain.original = *original;
  auto ordered = [&](const Rational& hi, const Rational& lo) {
    return g.maximizes() ? hi >= lo : hi <= lo;
  };
  if (!ordered(chain.anchor, chain.upper) || !ordered(chain.upper, chain.original) ||
      (chain.lower && !ordered(chain.original, *chain.lower))) {
    throw Error(ErrorKind::kAssumptionViolated,
                "anchor/upper/original/lower values are out of order at " + w.to_string());
  }
  return chain;
}

}  // namespace coregame
