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
#include "coregame/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "coregame/analysis.hpp"
#include "coregame/error.hpp"
#include "coregame/families.hpp"
#include "coregame/io.hpp"

namespace coregame::cli {

namespace {

struct Common {
  std::string path;
  bool json = false;
};

GameInstance load(const std::string& path) {
  GameInstance g = instance_from_json(read_json_file(path));
  if (const char* cap = std::getenv("COREGAME_ENUM_CAP")) {
    try {
      g.enumeration_cap = std::stoull(cap);
    } catch (const std::exception&) {
      throw Error(ErrorKind::kInvalidInput, std::string("COREGAME_ENUM_CAP is not a number: ") + cap);
    }
  }
  return g;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

// "3,2" or "3 2".
RatVector parse_vector(const std::string& text) {
  std::string spaced = text;
  for (char& c : spaced) {
    if (c == ',') c = ' ';
  }
  std::vector<Rational> values;
  std::istringstream in(spaced);
  std::string token;
  while (in >> token) values.push_back(Rational::parse(token));
  return from_std(values);
}

// Rows separated by ';'.
RatMatrix parse_matrix(const std::string& text) {
  const std::vector<std::string> rows = split(text, ';');
  if (rows.empty()) throw Error(ErrorKind::kInvalidInput, "empty matrix");
  RatMatrix m(static_cast<Eigen::Index>(rows.size()), parse_vector(rows[0]).size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const RatVector row = parse_vector(rows[r]);
    if (row.size() != m.cols()) throw Error(ErrorKind::kInvalidInput, "matrix rows differ in length");
    m.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return m;
}

// "0-1,1-2".
WeightedGraph parse_graph(int vertices, const std::string& text) {
  std::vector<Edge> edges;
  for (const std::string& item : split(text, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw Error(ErrorKind::kInvalidInput, "edge '" + item + "' is not u-v");
    edges.push_back({std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1))});
  }
  return make_graph(vertices, std::move(edges));
}

// A payoff vector given inline ("1/2,1/2") or as a JSON file holding an
// array or {"y": [...]}.
RatVector read_payoff(const std::string& arg) {
  if (std::filesystem::is_regular_file(arg)) {
    const Json j = read_json_file(arg);
    return vector_from_json(j.is_object() ? j.at("y") : j);
  }
  return parse_vector(arg);
}

std::string text(const std::optional<Rational>& v) { return v ? v->to_string() : "undefined"; }

void print_core(std::ostream& out, const CoreReport& r) {
  out << "theorem: " << r.theorem << "\n";
  if (r.nu_grand) out << "nu(1) = " << *r.nu_grand << "\n";
  out << "anchor(1) = " << r.anchor_grand << "\n";
  if (r.closed_form_value) out << "closed form value = " << *r.closed_form_value << "\n";
  out << "core: " << (r.nonempty ? "nonempty" : "empty") << "\n";
  if (r.member) out << "member: " << to_string(*r.member) << "\n";
  if (r.relaxed_optimum) out << "relaxed optimum: " << to_string(*r.relaxed_optimum) << "\n";
  if (r.gamma_min) out << "gamma_min = " << *r.gamma_min << "\n";
  for (const std::string& note : r.notes) out << "note: " << note << "\n";
}

void print_chain(std::ostream& out, const ValueChain& c) {
  out << "chain: anchor = " << c.anchor << ", upper = " << c.upper << ", original = " << c.original
      << ", lower = " << text(c.lower) << "\n";
}

void print_equivalence(std::ostream& out, const EquivalenceReport& r) {
  print_chain(out, r.chain);
  auto verdict = [](bool b) { return b ? "nonempty" : "empty"; };
  out << "original test: " << verdict(r.original_test) << "\n"
      << "upper test: " << verdict(r.upper_test) << " (upper = anchor: " << std::boolalpha
      << r.upper_equals_anchor << ", extension in argmax: " << r.argmax_extension << ")\n"
      << "lower test: " << verdict(r.lower_test) << "\n"
      << "consistent: " << r.consistent << "\n";
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int cmd_analyze(const Common& c, bool chain, bool equiv, std::ostream& out) {
  const GameInstance g = load(c.path);
  const CoreReport r = core_nonempty(g);
  const Coalition grand = Coalition::grand(g.players());
  Json j = to_json(r);
  if (!c.json) print_core(out, r);
  if (chain && !equiv) {
    const ValueChain vc = value_chain(g, grand);
    if (c.json) j["chain"] = to_json(vc); else print_chain(out, vc);
  }
  if (equiv) {
    const EquivalenceReport er = equivalence_check(g);
    if (c.json) j["equivalence"] = to_json(er); else print_equivalence(out, er);
  }
  if (c.json) emit(out, j);
  return kExitOk;
}

int cmd_member(const Common& c, const std::string& check, std::size_t enumerate_cap,
               std::ostream& out) {
  const GameInstance g = load(c.path);
  if (!check.empty()) {
    const RatVector y = read_payoff(check);
    require_valid(g);
    const bool accepted = is_core_member(g, y);
    const MembershipCheck brute = brute_force_membership(g, y);
    if (c.json) {
      emit(out, {{"payoff", to_json(y)}, {"accepted", accepted}, {"brute_force", to_json(brute)}});
    } else {
      out << "payoff " << to_string(y) << ": " << (accepted ? "accepted" : "rejected") << "\n";
      out << "brute force: " << (brute.member ? "member" : "not a member");
      if (!brute.reason.empty()) out << " (" << brute.reason << ")";
      out << "\n";
    }
    return kExitOk;
  }
  const CoreReport r = core_nonempty(g);
  if (!r.nonempty) {
    throw Error(ErrorKind::kEmptyCore, "nu(1) = " + text(r.nu_grand) + " < anchor(1) = " +
                                           r.anchor_grand.to_string());
  }
  Json j{{"member", to_json(*r.member)}};
  if (!c.json) out << "member: " << to_string(*r.member) << "\n";
  if (enumerate_cap > 0) {
    const DualVertices dv =
        enumerate_optimal_dual_vertices(anchor_lp(g, Coalition::grand(g.players())), enumerate_cap);
    Json list = Json::array();
    for (const RatVector& v : dv.vertices) {
      const RatVector y = payoff_from_dual(g, v);
      list.push_back(to_json(y));
      if (!c.json) out << "vertex: " << to_string(y) << "\n";
    }
    j["vertices"] = list;
    j["partial"] = dv.partial;
    if (!c.json && dv.partial) out << "enumeration stopped at the cap\n";
  }
  if (c.json) emit(out, j);
  return kExitOk;
}

int cmd_gamma(const Common& c, std::ostream& out) {
  const GammaReport r = gamma_analysis(load(c.path));
  if (c.json) {
    emit(out, to_json(r));
  } else {
    out << "nu(1) = " << r.nu_grand << "\nanchor(1) = " << r.anchor_grand << "\ngamma_min = "
        << r.gamma_min << "\nmember: " << to_string(r.member) << "\n";
  }
  return kExitOk;
}

int cmd_oracle(const Common& c, bool compare, std::ostream& out) {
  const GameInstance g = load(c.path);
  const BondarevaReport r = bondareva_oracle(g);
  Json j = to_json(r);
  if (!c.json) {
    out << "coalitions: " << r.coalition_values.size() << " feasible, " << r.infeasible.size()
        << " infeasible\noracle LP value = " << r.lp_value
        << "\ncore: " << (r.nonempty ? "nonempty" : "empty") << "\n";
    if (r.member) out << "member: " << to_string(*r.member) << "\n";
  }
  int code = kExitOk;
  if (compare) {
    const CoreReport theorem = core_nonempty(g);
    bool agree = theorem.nonempty == r.nonempty;
    if (agree && theorem.member) agree = brute_force_membership(g, *theorem.member).member;
    j["agrees"] = agree;
    if (!c.json) {
      out << (agree ? "oracle agrees with theorem path" : "oracle DISAGREES with theorem path") << "\n";
    }
    if (!agree) code = kExitSolver;
  }
  if (c.json) emit(out, j);
  return code;
}

int cmd_check_is(const Common& c, std::ostream& out) {
  const GameInstance g = load(c.path);
  const AssumptionReport report = validate(g);
  Json j{{"ok", report.ok()}, {"violations", report.violations}, {"notes", report.notes}};
  const bool boolean = std::holds_alternative<BooleanDomain>(g.domain.kind);
  std::optional<ClassVerdicts> classes;
  if (boolean && !g.objective.depends_on_coalition() && g.dimension() <= kDefaultClassCheckLimit) {
    classes = class_checks(g.objective);
    j["classes"] = {{"individually_subadditive", classes->individually_subadditive},
                    {"subadditive", classes->subadditive},
                    {"submodular", classes->submodular},
                    {"grand_fractionally_subadditive", classes->grand_fractionally_subadditive},
                    {"fractionally_subadditive", classes->fractionally_subadditive},
                    {"monotone", classes->monotone}};
  }
  if (c.json) {
    emit(out, j);
  } else {
    out << "assumptions: " << (report.ok() ? "hold" : "violated") << "\n";
    for (const std::string& v : report.violations) out << "violation: " << v << "\n";
    for (const std::string& n : report.notes) out << "note: " << n << "\n";
    if (classes) {
      out << std::boolalpha << "individually subadditive: " << classes->individually_subadditive
          << "\nsubadditive: " << classes->subadditive << "\nsubmodular: " << classes->submodular
          << "\ngrand fractionally subadditive: " << classes->grand_fractionally_subadditive
          << "\nfractionally subadditive: " << classes->fractionally_subadditive
          << "\nmonotone: " << classes->monotone << "\n";
    }
  }
  return report.ok() ? kExitOk : kExitAssumption;
}

int cmd_equiv(const Common& c, std::ostream& out) {
  const EquivalenceReport r = equivalence_check(load(c.path));
  if (c.json) emit(out, to_json(r)); else print_equivalence(out, r);
  return kExitOk;
}

struct GenerateArgs {
  std::string family;
  std::string output;
  std::string mu, sigma, risk = "1";
  int complete = 0;
  std::string weight = "1";
  std::string weights;
  std::string prices, prefs;
  int vertices = 0;
  std::string edges, b, q, c, d, d0 = "1";
  std::string sat;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  Json j;
  if (a.family == "portfolio") {
    j = to_json(portfolio_game(parse_vector(a.mu), parse_matrix(a.sigma), Rational::parse(a.risk)));
  } else if (a.family == "maxcut") {
    RatMatrix w;
    if (a.complete > 0) {
      w = RatMatrix::Constant(a.complete, a.complete, Rational::parse(a.weight));
      for (int i = 0; i < a.complete; ++i) w(i, i) = 0;
    } else {
      w = parse_matrix(a.weights);
    }
    j = to_json(maxcut_game(w));
  } else if (a.family == "assortment") {
    j = to_json(assortment_game(parse_vector(a.prices), parse_vector(a.prefs)));
  } else if (a.family == "qmatching") {
    const WeightedGraph graph = parse_graph(a.vertices, a.edges);
    const RatMatrix q = a.q.empty() ? RatMatrix(RatMatrix::Zero(graph.edge_count(), graph.edge_count()))
                                    : parse_matrix(a.q);
    j = to_json(quadratic_matching_game(graph, parse_vector(a.b), q));
  } else if (a.family == "rmatching") {
    const WeightedGraph graph = parse_graph(a.vertices, a.edges);
    j = to_json(ratio_matching_game(graph, parse_vector(a.c), parse_vector(a.d), Rational::parse(a.d0)));
  } else if (a.family == "sat-reduction") {
    std::ifstream in(a.sat);
    if (!in) throw Error(ErrorKind::kInvalidInput, "cannot read " + a.sat);
    std::stringstream buffer;
    buffer << in.rdbuf();
    const ConflictStructure cs = sat_reduction(parse_sat(buffer.str()));
    j = to_json(sat_matching_game(cs));
    j["conflict_structure"] = to_json(cs);
  } else {
    throw Error(ErrorKind::kInvalidInput, "unknown family '" + a.family + "'");
  }
  if (a.output.empty()) {
    emit(out, j);
  } else {
    std::ofstream file(a.output);
    if (!file) throw Error(ErrorKind::kInvalidInput, "cannot write " + a.output);
    emit(file, j);
  }
  return kExitOk;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kAssumptionViolated: return kExitAssumption;
    case ErrorKind::kSolverStatus:
    case ErrorKind::kInfeasibleSubprogram:
    case ErrorKind::kStatusNotOptimal:
    case ErrorKind::kEmptyCore:
    case ErrorKind::kZeroGrandValue: return kExitSolver;
    default: return kExitUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Core non-emptiness and core members of optimization games", "coregame"};
  app.require_subcommand(1);

  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("instance", common.path, "Instance JSON file")->required();
    sub->add_flag("--json", common.json, "Print JSON instead of text");
  };

  bool chain = false;
  bool equiv = false;
  auto* analyze = app.add_subcommand("analyze", "Decide core non-emptiness");
  add_common(analyze);
  analyze->add_flag("--chain", chain, "Also print the anchor/upper/original/lower chain");
  analyze->add_flag("--equiv", equiv, "Also run the three equivalent characterizations");

  std::string check;
  std::size_t enumerate_cap = 0;
  auto* member = app.add_subcommand("member", "Extract or verify a core member");
  add_common(member);
  member->add_option("--check", check, "Payoff to verify: JSON file or comma-separated rationals");
  member->add_option("--enumerate", enumerate_cap, "List optimal dual vertices up to this many bases");

  auto* gamma = app.add_subcommand("gamma", "Smallest gamma with a nonempty gamma-core");
  add_common(gamma);

  bool compare = false;
  auto* oracle = app.add_subcommand("oracle", "Coalition-enumeration (Bondareva) core test");
  add_common(oracle);
  oracle->add_flag("--compare", compare, "Cross-check against the relaxation path");

  auto* check_is = app.add_subcommand("check-is", "Check domain assumptions and subadditivity");
  add_common(check_is);

  auto* equiv_cmd = app.add_subcommand("equiv", "Run the equivalent characterizations");
  add_common(equiv_cmd);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Emit an instance file for an application family");
  generate->add_option("family", gen.family,
                       "portfolio | maxcut | assortment | qmatching | rmatching | sat-reduction")
      ->required();
  generate->add_option("-o,--output", gen.output, "Write to a file instead of stdout");
  generate->add_option("--mu", gen.mu, "portfolio: mean returns, e.g. 3,2");
  generate->add_option("--sigma", gen.sigma, "portfolio: covariance rows, e.g. '1,0;0,1'");
  generate->add_option("--risk", gen.risk, "portfolio: risk factor");
  generate->add_option("--complete", gen.complete, "maxcut: complete graph size");
  generate->add_option("--weight", gen.weight, "maxcut: uniform edge weight");
  generate->add_option("--weights", gen.weights, "maxcut: weight matrix rows");
  generate->add_option("--prices", gen.prices, "assortment: prices");
  generate->add_option("--prefs", gen.prefs, "assortment: preference weights");
  generate->add_option("--vertices", gen.vertices, "matching: vertex count");
  generate->add_option("--edges", gen.edges, "matching: edges, e.g. 0-1,1-2");
  generate->add_option("--b", gen.b, "qmatching: linear edge weights");
  generate->add_option("--q", gen.q, "qmatching: interaction matrix rows (default 0)");
  generate->add_option("--c", gen.c, "rmatching: numerator weights");
  generate->add_option("--d", gen.d, "rmatching: denominator weights");
  generate->add_option("--d0", gen.d0, "rmatching: denominator constant");
  generate->add_option("--sat", gen.sat, "sat-reduction: file with 'p 3b2sat n k' header");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(common, chain, equiv, out);
    if (*member) return cmd_member(common, check, enumerate_cap, out);
    if (*gamma) return cmd_gamma(common, out);
    if (*oracle) return cmd_oracle(common, compare, out);
    if (*check_is) return cmd_check_is(common, out);
    if (*equiv_cmd) return cmd_equiv(common, out);
    return cmd_generate(gen, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace coregame::cli
