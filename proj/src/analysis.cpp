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
#include "coregame/analysis.hpp"

#include <string>
#include <utility>

#include "coregame/error.hpp"

namespace coregame {

namespace {

Coalition grand_of(const GameInstance& g) { return Coalition::grand(g.players()); }

RatVector rescaled_dual(const GameInstance& g, const RatVector& y) {
  RatVector out = y;
  for (Eigen::Index i = 0; i < out.size(); ++i) out(i) /= g.rhs_scale;
  return out;
}

Rational masked_sum(const RatVector& y, std::uint64_t mask) {
  Rational total(0);
  for (Eigen::Index i = 0; i < y.size(); ++i) {
    if ((mask >> i) & 1U) total += y(i);
  }
  return total;
}

void check_payoff_size(const GameInstance& g, const RatVector& y) {
  if (y.size() != g.players()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "payoff has " + std::to_string(y.size()) + " entries, game has " +
                    std::to_string(g.players()) + " players");
  }
}

// The partition dual exactly as printed: min 1ᵀy, y ≥ 0, Aᵀy ≤ F.
std::string literal_partition_note(const GameInstance& g, const BasisCoefficients& bc,
                                   const Rational& anchor) {
  LpProblem p;
  p.sense = LpSense::kMinimize;
  p.c = ones(g.players());
  p.a = g.a.transpose();
  p.row_sense.assign(static_cast<std::size_t>(g.dimension()), RowSense::kLe);
  p.rhs = bc.coeffs;
  const LpSolution s = solve(p);
  std::string text = "partition dual read as min 1'y, y >= 0, A'y <= F: ";
  if (s.status != LpStatus::kOptimal) return text + to_string(s.status) + "; used free y with A'y >= F";
  if (s.value == anchor) return text + "value " + s.value.to_string() + ", agrees with the anchor";
  return text + "value " + s.value.to_string() + " disagrees with anchor " + anchor.to_string() +
         "; used free y with A'y >= F";
}

}  // namespace

CoreReport core_nonempty(const GameInstance& g) {
  require_valid(g);
  const TheoremVariant variant = theorem_variant(g);
  const Coalition grand = grand_of(g);
  CoreReport report;
  report.theorem = to_string(variant);
  report.nu_grand = try_nu(g, grand);
  if (!report.nu_grand) {
    throw Error(ErrorKind::kInfeasibleSubprogram, "grand coalition has no feasible point");
  }
  const LpSolution anchor = anchor_solution(g, grand);
  report.anchor_grand = anchor.value;
  report.nonempty = *report.nu_grand == anchor.value;
  if (report.nonempty) {
    report.member = payoff_from_dual(g, anchor.dual);
  } else if (const RatMatrix* q = generators(g.domain)) {
    report.relaxed_optimum = RatVector(*q * anchor.primal);
  } else {
    report.relaxed_optimum = anchor.primal;
  }
  if (g.sense == GameSense::kPacking && report.nu_grand->sign() > 0) {
    report.gamma_min = anchor.value / *report.nu_grand;
  }
  if (g.sense == GameSense::kPartition) {
    report.notes.push_back(literal_partition_note(g, relaxation(g), anchor.value));
  }
  if (g.sense == GameSense::kCovering) {
    report.notes.push_back("cost game: core is 1'y = nu(1), a'y <= nu(a)");
  }
  return report;
}

bool is_core_member(const GameInstance& g, const RatVector& y) {
  check_payoff_size(g, y);
  const Coalition grand = grand_of(g);
  const std::optional<Rational> nu_grand = try_nu(g, grand);
  if (!nu_grand) return false;
  const LpProblem p = anchor_lp(g, grand);
  const LpSolution s = solve(p);
  if (s.status != LpStatus::kOptimal || s.value != *nu_grand) return false;
  return is_dual_optimal(p, rescaled_dual(g, y));
}

MembershipCheck brute_force_membership(const std::vector<std::optional<Rational>>& values,
                                       bool cost_game, const RatVector& y) {
  const int n = static_cast<int>(y.size());
  if (values.size() != (std::uint64_t{1} << n)) {
    throw Error(ErrorKind::kDimensionMismatch, "coalition table does not match payoff size");
  }
  const std::uint64_t full = values.size() - 1;
  MembershipCheck out;
  if (!values[full]) {
    out.reason = "grand coalition is infeasible";
    return out;
  }
  const Rational total = sum(y);
  if (total != *values[full]) {
    out.violated = Coalition(n, full);
    out.reason = "payoffs sum to " + total.to_string() + ", nu(1) = " + values[full]->to_string();
    return out;
  }
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    if (!values[mask]) continue;
    const Rational share = masked_sum(y, mask);
    const bool ok = cost_game ? share <= *values[mask] : share >= *values[mask];
    if (!ok) {
      out.violated = Coalition(n, mask);
      out.reason = "coalition " + out.violated->to_string() + " receives " + share.to_string() +
                   ", nu = " + values[mask]->to_string();
      return out;
    }
  }
  out.member = true;
  return out;
}

MembershipCheck brute_force_membership(const GameInstance& g, const RatVector& y) {
  check_payoff_size(g, y);
  return brute_force_membership(nu_all(g), !g.maximizes(), y);
}

IntegralityReport integrality_check(const GameInstance& g) {
  if (generators(g.domain) != nullptr) {
    throw Error(ErrorKind::kInvalidInput, "integrality check needs a 0/1 domain, not a cone");
  }
  const int m = g.dimension();
  if (m > 24) throw Error(ErrorKind::kTooLarge, "integrality check limited to 24 variables");
  const BasisCoefficients bc = relaxation(g);
  const Coalition grand = grand_of(g);
  const LpProblem p = anchor_lp(g, grand);
  const LpSolution anchor = solve(p);
  if (anchor.status != LpStatus::kOptimal) {
    throw Error(ErrorKind::kSolverStatus, std::string("anchor LP is ") + to_string(anchor.status));
  }
  IntegralityReport out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m) && !out.integer_optimum; ++mask) {
    RatVector x = zeros(m);
    for (int j = 0; j < m; ++j) {
      if ((mask >> j) & 1U) x(j) = 1;
    }
    if (relaxation_value(bc, x) != anchor.value) continue;
    const RatVector ax = p.a * x;
    bool ok = true;
    for (Eigen::Index i = 0; i < ax.size() && ok; ++i) {
      switch (p.row_sense[static_cast<std::size_t>(i)]) {
        case RowSense::kLe: ok = ax(i) <= p.rhs(i); break;
        case RowSense::kGe: ok = ax(i) >= p.rhs(i); break;
        case RowSense::kEq: ok = ax(i) == p.rhs(i); break;
      }
    }
    if (ok) out.integer_optimum = x;
  }
  out.relax_has_integer_optimum = out.integer_optimum.has_value();
  const std::optional<Rational> nu_grand = try_nu(g, grand);
  out.core_nonempty = nu_grand && *nu_grand == anchor.value;
  out.converse_note =
      "an integral optimum of the relaxation is necessary for a nonempty core, not sufficient";
  return out;
}

EquivalenceReport equivalence_check(const GameInstance& g) {
  const Coalition grand = grand_of(g);
  EquivalenceReport out;
  out.chain = value_chain(g, grand);
  const BasisCoefficients bc = relaxation(g);
  for_each_feasible(g, grand, [&](const RatVector& x, const Rational& fx) {
    if (out.argmax_witness) return;
    const Rational big_f = relaxation_value(bc, x);
    if (big_f == out.chain.upper && fx == big_f) out.argmax_witness = x;
  });
  out.original_test = out.chain.original == out.chain.anchor;
  out.upper_equals_anchor = out.chain.upper == out.chain.anchor;
  out.argmax_extension = out.argmax_witness.has_value();
  out.upper_test = out.upper_equals_anchor && out.argmax_extension;
  out.lower_test = out.chain.lower && *out.chain.lower == out.chain.anchor;
  out.consistent = out.original_test == out.upper_test && out.upper_test == out.lower_test;
  return out;
}

BondarevaReport bondareva_oracle(const GameInstance& g, int max_players) {
  const int n = g.players();
  if (n > max_players) {
    throw Error(ErrorKind::kTooLarge, "Bondareva oracle limited to " +
                                          std::to_string(max_players) + " players");
  }
  const std::vector<std::optional<Rational>> values = nu_all(g);
  const std::uint64_t full = values.size() - 1;
  if (!values[full]) {
    throw Error(ErrorKind::kInfeasibleSubprogram, "grand coalition has no feasible point");
  }
  BondarevaReport out;
  std::vector<std::uint64_t> rows;
  for (std::uint64_t mask = 1; mask <= full; ++mask) {
    if (values[mask]) {
      out.coalition_values.emplace(Coalition(n, mask), *values[mask]);
      rows.push_back(mask);
    } else {
      out.infeasible.emplace_back(n, mask);
    }
  }
  const bool cost = !g.maximizes();
  LpProblem p;
  p.sense = cost ? LpSense::kMaximize : LpSense::kMinimize;
  p.c = ones(n);
  p.a = RatMatrix::Zero(static_cast<Eigen::Index>(rows.size()), n);
  p.rhs = zeros(static_cast<Eigen::Index>(rows.size()));
  p.row_sense.assign(rows.size(), cost ? RowSense::kLe : RowSense::kGe);
  p.var_sign.assign(static_cast<std::size_t>(n), VarSign::kFree);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const auto i = static_cast<Eigen::Index>(r);
    for (int j = 0; j < n; ++j) {
      if ((rows[r] >> j) & 1U) p.a(i, j) = 1;
    }
    p.rhs(i) = *values[rows[r]];
  }
  const LpSolution s = solve(p);
  if (s.status != LpStatus::kOptimal) {
    throw Error(ErrorKind::kSolverStatus, std::string("Bondareva LP is ") + to_string(s.status));
  }
  out.lp_value = s.value;
  out.nonempty = s.value == *values[full];
  if (out.nonempty) out.member = s.primal;
  return out;
}

Rational tbc_value(const GameInstance& g, const Coalition& w, int max_players) {
  if (w.players() != g.players()) {
    throw Error(ErrorKind::kDimensionMismatch, "coalition size does not match the game");
  }
  if (w.size() > max_players) {
    throw Error(ErrorKind::kTooLarge, "balanced cover limited to " + std::to_string(max_players) +
                                          " members");
  }
  if (w.is_empty()) return Rational(0);
  std::vector<int> members;
  for (int i = 0; i < g.players(); ++i) {
    if (w.contains(i)) members.push_back(i);
  }
  std::vector<std::uint64_t> columns;
  std::vector<Rational> values;
  const std::uint64_t wm = w.mask();
  for (std::uint64_t a = wm; a != 0; a = (a - 1) & wm) {
    if (const auto v = try_nu(g, Coalition(g.players(), a))) {
      columns.push_back(a);
      values.push_back(*v);
    }
  }
  LpProblem p;
  p.sense = g.maximizes() ? LpSense::kMaximize : LpSense::kMinimize;
  p.c = from_std(values);
  p.a = RatMatrix::Zero(static_cast<Eigen::Index>(members.size()),
                        static_cast<Eigen::Index>(columns.size()));
  for (std::size_t r = 0; r < members.size(); ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if ((columns[c] >> members[r]) & 1U) {
        p.a(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = 1;
      }
    }
  }
  p.row_sense.assign(members.size(), RowSense::kEq);
  p.rhs = ones(static_cast<Eigen::Index>(members.size()));
  const LpSolution s = solve(p);
  if (s.status != LpStatus::kOptimal) {
    throw Error(ErrorKind::kSolverStatus, std::string("balanced cover LP is ") + to_string(s.status));
  }
  return s.value;
}

GammaReport gamma_analysis(const GameInstance& g) {
  if (g.sense != GameSense::kPacking) {
    throw Error(ErrorKind::kInvalidInput, "gamma analysis applies to packing games");
  }
  require_valid(g);
  const Coalition grand = grand_of(g);
  GammaReport out;
  out.nu_grand = nu(g, grand);
  if (out.nu_grand.sign() <= 0) {
    throw Error(ErrorKind::kZeroGrandValue, "nu(1) = " + out.nu_grand.to_string());
  }
  const LpSolution anchor = anchor_solution(g, grand);
  out.anchor_grand = anchor.value;
  out.gamma_min = anchor.value / out.nu_grand;
  out.member = payoff_from_dual(g, anchor.dual);
  return out;
}

bool in_gamma_core(const GameInstance& g, const Rational& gamma, const RatVector& y) {
  check_payoff_size(g, y);
  const std::vector<std::optional<Rational>> values = nu_all(g);
  const std::uint64_t full = values.size() - 1;
  if (!values[full] || sum(y) > gamma * *values[full]) return false;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    if (values[mask] && masked_sum(y, mask) < *values[mask]) return false;
  }
  return true;
}

SuperadditivityReport superadditivity_probe(const GameInstance& g, int max_players) {
  const int n = g.players();
  if (n > max_players) {
    throw Error(ErrorKind::kTooLarge, "superadditivity probe limited to " +
                                          std::to_string(max_players) + " players");
  }
  const std::vector<std::optional<Rational>> values = nu_all(g);
  const bool cost = !g.maximizes();
  SuperadditivityReport out;
  for (std::uint64_t s = values.size() - 1; s != 0; --s) {
    if (!values[s]) continue;
    for (std::uint64_t t = (s - 1) & s; t != 0; t = (t - 1) & s) {
      const std::uint64_t u = s ^ t;
      if (t > u || !values[t] || !values[u]) continue;
      const Rational split = *values[t] + *values[u];
      if (cost ? split < *values[s] : split > *values[s]) {
        out.superadditive = false;
        out.first = Coalition(n, t);
        out.second = Coalition(n, u);
        return out;
      }
    }
  }
  return out;
}

}  // namespace coregame
