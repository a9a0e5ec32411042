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
#include "coregame/io.hpp"

#include <fstream>
#include <sstream>
#include <variant>

#include "coregame/error.hpp"

namespace coregame {

namespace {

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorKind::kInvalidInput, message); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

template <typename T>
void put_optional(Json& out, const char* key, const std::optional<T>& value) {
  if (value) out[key] = to_json(*value);
}

Json coalition_json(const Coalition& c) { return c.to_string(); }

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      bad(std::string("bad rational: ") + e.what());
    }
  }
  bad("rationals must be integers or \"p/q\" strings, got " + j.dump());
}

Json to_json(const Rational& r) { return r.to_string(); }

RatVector vector_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an array, got " + j.dump());
  RatVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = rational_from_json(j[i]);
  return v;
}

Json to_json(const RatVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

RatMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) bad("expected a non-empty array of rows");
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  RatMatrix m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != cols) bad("matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rational_from_json(j[r][c]);
    }
  }
  return m;
}

Json matrix_to_json(const RatMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) out.push_back(to_json(RatVector(m.row(r).transpose())));
  return out;
}

DomainSpec domain_from_json(const Json& j, int m) {
  const std::string type = field(j, "kind").get<std::string>();
  if (type == "boolean") return boolean_domain(m);
  if (type == "cardinality") return boolean_cardinality(m, int_field(j, "k"));
  if (type == "knapsack") {
    return boolean_knapsack(matrix_from_json(field(j, "weights")),
                            vector_from_json(field(j, "capacity")));
  }
  if (type == "explicit") {
    std::vector<RatVector> points;
    for (const Json& p : field(j, "points")) points.push_back(vector_from_json(p));
    return explicit_finite(m, std::move(points));
  }
  if (type == "integer_box") return integer_box(m, int_field(j, "upper"));
  if (type == "orthant") return orthant(m);
  if (type == "cone") {
    const RatMatrix q = matrix_from_json(field(j, "generators"));
    return generator_cone(domain_from_json(field(j, "base"), m), q);
  }
  if (type == "indexed") {
    std::map<Coalition, DomainPtr> family;
    for (const auto& [key, value] : field(j, "family").items()) {
      family.emplace(Coalition::parse(key), std::make_shared<const DomainSpec>(domain_from_json(value, m)));
    }
    return coalition_indexed(m, std::move(family));
  }
  bad("unknown domain kind '" + type + "'");
}

Json to_json(const DomainSpec& d) {
  return std::visit(
      [](const auto& k) -> Json {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, BooleanDomain>) {
          return {{"kind", "boolean"}};
        } else if constexpr (std::is_same_v<T, BooleanCardinality>) {
          return {{"kind", "cardinality"}, {"k", k.k}};
        } else if constexpr (std::is_same_v<T, BooleanKnapsack>) {
          return {{"kind", "knapsack"}, {"weights", matrix_to_json(k.weights)},
                  {"capacity", to_json(k.capacity)}};
        } else if constexpr (std::is_same_v<T, ExplicitFinite>) {
          Json points = Json::array();
          for (const RatVector& p : k.points) points.push_back(to_json(p));
          return {{"kind", "explicit"}, {"points", points}};
        } else if constexpr (std::is_same_v<T, IntegerBox>) {
          return {{"kind", "integer_box"}, {"upper", k.upper}};
        } else if constexpr (std::is_same_v<T, Orthant>) {
          return {{"kind", "orthant"}};
        } else if constexpr (std::is_same_v<T, GeneratorCone>) {
          return {{"kind", "cone"}, {"base", to_json(*k.base)},
                  {"generators", matrix_to_json(k.generators)}};
        } else {
          Json family = Json::object();
          for (const auto& [w, dom] : k.family) family[w.to_string()] = to_json(*dom);
          return {{"kind", "indexed"}, {"family", family}};
        }
      },
      d.kind);
}

Objective objective_from_json(const Json& j, int m) {
  const std::string type = field(j, "kind").get<std::string>();
  if (type == "linear") return Objective::linear(vector_from_json(field(j, "c")));
  if (type == "quadratic") {
    return Objective::quadratic(vector_from_json(field(j, "b")), matrix_from_json(field(j, "Q")));
  }
  if (type == "ratio") {
    return Objective::ratio(vector_from_json(field(j, "c")), vector_from_json(field(j, "d")),
                            rational_from_json(field(j, "d0")));
  }
  if (type == "table") {
    std::vector<std::pair<RatVector, Rational>> entries;
    for (const Json& e : field(j, "entries")) {
      entries.emplace_back(vector_from_json(field(e, "x")), rational_from_json(field(e, "value")));
    }
    return Objective::table(m, entries);
  }
  if (type == "coalition_table") {
    std::vector<std::tuple<RatVector, Coalition, Rational>> entries;
    for (const Json& e : field(j, "entries")) {
      entries.emplace_back(vector_from_json(field(e, "x")),
                           Coalition::parse(field(e, "w").get<std::string>()),
                           rational_from_json(field(e, "value")));
    }
    return Objective::coalition_dependent(m, entries);
  }
  if (type == "scaled") {
    return Objective::scaled(rational_from_json(field(j, "alpha")),
                             objective_from_json(field(j, "inner"), m));
  }
  if (type == "sum") {
    std::vector<Objective> terms;
    for (const Json& t : field(j, "terms")) terms.push_back(objective_from_json(t, m));
    if (terms.empty()) bad("sum objective needs at least one term");
    return Objective::sum(std::move(terms));
  }
  if (type == "max") {
    return Objective::max(objective_from_json(field(j, "first"), m),
                          objective_from_json(field(j, "second"), m));
  }
  if (type == "precomposed") {
    const RatMatrix mm = matrix_from_json(field(j, "M"));
    return Objective::precomposed(mm, objective_from_json(field(j, "inner"),
                                                          static_cast<int>(mm.rows())));
  }
  bad("unknown objective kind '" + type + "'");
}

Json to_json(const Objective& f) {
  return std::visit(
      [](const auto& k) -> Json {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, LinearObjective>) {
          return {{"kind", "linear"}, {"c", to_json(k.c)}};
        } else if constexpr (std::is_same_v<T, QuadraticObjective>) {
          return {{"kind", "quadratic"}, {"b", to_json(k.b)}, {"Q", matrix_to_json(k.q)}};
        } else if constexpr (std::is_same_v<T, RatioObjective>) {
          return {{"kind", "ratio"}, {"c", to_json(k.c)}, {"d", to_json(k.d)}, {"d0", to_json(k.d0)}};
        } else if constexpr (std::is_same_v<T, TableObjective>) {
          Json entries = Json::array();
          for (const auto& [x, v] : k.values) {
            entries.push_back({{"x", to_json(from_std(x))}, {"value", to_json(v)}});
          }
          return {{"kind", "table"}, {"entries", entries}};
        } else if constexpr (std::is_same_v<T, ScaledObjective>) {
          return {{"kind", "scaled"}, {"alpha", to_json(k.alpha)}, {"inner", to_json(k.inner)}};
        } else if constexpr (std::is_same_v<T, SumObjective>) {
          Json terms = Json::array();
          for (const Objective& t : k.terms) terms.push_back(to_json(t));
          return {{"kind", "sum"}, {"terms", terms}};
        } else if constexpr (std::is_same_v<T, MaxObjective>) {
          return {{"kind", "max"}, {"first", to_json(k.first)}, {"second", to_json(k.second)}};
        } else if constexpr (std::is_same_v<T, PrecomposedObjective>) {
          return {{"kind", "precomposed"}, {"M", matrix_to_json(k.m)}, {"inner", to_json(k.inner)}};
        } else {
          Json entries = Json::array();
          for (const auto& [key, v] : k.values) {
            entries.push_back({{"x", to_json(from_std(key.first))},
                               {"w", key.second.to_string()},
                               {"value", to_json(v)}});
          }
          return {{"kind", "coalition_table"}, {"entries", entries}};
        }
      },
      f.node().kind);
}

GameInstance instance_from_json(const Json& j) {
  try {
    const int n = int_field(j, "n");
    const int m = int_field(j, "m");
    const RatMatrix a = matrix_from_json(field(j, "A"));
    if (a.rows() != n || a.cols() != m) {
      throw Error(ErrorKind::kDimensionMismatch, "A must be n x m");
    }
    const std::string sense_name = j.value("sense", std::string("packing"));
    GameSense sense;
    if (sense_name == "packing") {
      sense = GameSense::kPacking;
    } else if (sense_name == "covering") {
      sense = GameSense::kCovering;
    } else if (sense_name == "partition") {
      sense = GameSense::kPartition;
    } else {
      bad("unknown sense '" + sense_name + "'");
    }
    const Rational scale = j.contains("rhs_scale") ? rational_from_json(j["rhs_scale"]) : Rational(1);
    DomainSpec domain;
    if (j.contains("domain_family")) {
      std::map<Coalition, DomainPtr> family;
      for (const auto& [key, value] : j["domain_family"].items()) {
        family.emplace(Coalition::parse(key),
                       std::make_shared<const DomainSpec>(domain_from_json(value, m)));
      }
      domain = coalition_indexed(m, std::move(family));
    } else {
      domain = domain_from_json(field(j, "domain"), m);
    }
    if (j.contains("generators")) domain = generator_cone(domain, matrix_from_json(j["generators"]));
    return GameInstance(a, sense, std::move(domain), objective_from_json(field(j, "objective"), m),
                        scale);
  } catch (const Json::exception& e) {
    bad(std::string("malformed instance: ") + e.what());
  }
}

Json to_json(const GameInstance& g) {
  Json out;
  out["n"] = g.players();
  out["m"] = g.dimension();
  out["A"] = matrix_to_json(g.a);
  out["sense"] = to_string(g.sense);
  out["rhs_scale"] = to_json(g.rhs_scale);
  if (const auto* cone = std::get_if<GeneratorCone>(&g.domain.kind)) {
    out["domain"] = to_json(*cone->base);
    out["generators"] = matrix_to_json(cone->generators);
  } else if (const auto* indexed = std::get_if<CoalitionIndexed>(&g.domain.kind)) {
    Json family = Json::object();
    for (const auto& [w, dom] : indexed->family) family[w.to_string()] = to_json(*dom);
    out["domain_family"] = family;
  } else {
    out["domain"] = to_json(g.domain);
  }
  out["objective"] = to_json(g.objective);
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad(path.string() + ": " + e.what());
  }
}

Json to_json(const CoreReport& r) {
  Json out{{"nonempty", r.nonempty}, {"anchor_grand", to_json(r.anchor_grand)}, {"theorem", r.theorem}};
  put_optional(out, "nu_grand", r.nu_grand);
  put_optional(out, "closed_form_value", r.closed_form_value);
  put_optional(out, "member", r.member);
  put_optional(out, "gamma_min", r.gamma_min);
  put_optional(out, "relaxed_optimum", r.relaxed_optimum);
  out["notes"] = r.notes;
  return out;
}

Json to_json(const BondarevaReport& r) {
  Json values = Json::object();
  for (const auto& [w, v] : r.coalition_values) values[w.to_string()] = to_json(v);
  Json infeasible = Json::array();
  for (const Coalition& w : r.infeasible) infeasible.push_back(coalition_json(w));
  Json out{{"coalition_values", values},
           {"infeasible", infeasible},
           {"lp_value", to_json(r.lp_value)},
           {"nonempty", r.nonempty}};
  put_optional(out, "member", r.member);
  return out;
}

Json to_json(const ValueChain& c) {
  Json out{{"anchor", to_json(c.anchor)}, {"upper", to_json(c.upper)}, {"original", to_json(c.original)}};
  out["lower"] = c.lower ? to_json(*c.lower) : Json(nullptr);
  return out;
}

Json to_json(const EquivalenceReport& r) {
  Json out{{"chain", to_json(r.chain)},
           {"original_test", r.original_test},
           {"upper_equals_anchor", r.upper_equals_anchor},
           {"argmax_extension", r.argmax_extension},
           {"upper_test", r.upper_test},
           {"lower_test", r.lower_test},
           {"consistent", r.consistent}};
  put_optional(out, "argmax_witness", r.argmax_witness);
  return out;
}

Json to_json(const GammaReport& r) {
  return {{"nu_grand", to_json(r.nu_grand)},
          {"anchor_grand", to_json(r.anchor_grand)},
          {"gamma_min", to_json(r.gamma_min)},
          {"member", to_json(r.member)}};
}

Json to_json(const IsVerdict& v) {
  Json out{{"holds", v.holds}, {"notes", v.notes}};
  put_optional(out, "witness", v.witness);
  if (v.witness_coalition) out["witness_coalition"] = coalition_json(*v.witness_coalition);
  return out;
}

Json to_json(const MembershipCheck& m) {
  Json out{{"member", m.member}, {"reason", m.reason}};
  if (m.violated) out["violated"] = coalition_json(*m.violated);
  return out;
}

Json to_json(const AssortmentReport& r) {
  return {{"core_nonempty", r.core_nonempty},
          {"nu_grand", to_json(r.nu_grand)},
          {"anchor_grand", to_json(r.anchor_grand)},
          {"gamma_min", to_json(r.gamma_min)},
          {"n_core_member", to_json(r.n_core_member)}};
}

Json to_json(const ReductionCheck& r) {
  return {{"max_conflict_matching", r.max_conflict_matching},
          {"target", r.target},
          {"satisfiable", r.satisfiable},
          {"consistent", r.consistent}};
}

Json to_json(const ConflictStructure& cs) {
  Json edges = Json::array();
  for (int e = 0; e < cs.graph.edge_count(); ++e) {
    edges.push_back({{"name", cs.edge_names[e]}, {"u", cs.graph.edges[e].u}, {"v", cs.graph.edges[e].v}});
  }
  Json conflicts = Json::array();
  for (const auto& [i, j] : cs.conflicts) conflicts.push_back({i, j});
  return {{"vertices", cs.graph.vertices}, {"edges", edges}, {"conflicts", conflicts}};
}

}  // namespace coregame
