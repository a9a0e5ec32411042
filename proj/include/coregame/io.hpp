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
#ifndef COREGAME_IO_HPP
#define COREGAME_IO_HPP

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "coregame/analysis.hpp"
#include "coregame/families.hpp"
#include "coregame/game.hpp"

namespace coregame {

using Json = nlohmann::json;

// Rationals travel as "p/q" strings; integers are also accepted on input.
Rational rational_from_json(const Json& j);
Json to_json(const Rational& r);
RatVector vector_from_json(const Json& j);
Json to_json(const RatVector& v);
RatMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const RatMatrix& m);

DomainSpec domain_from_json(const Json& j, int m);
Json to_json(const DomainSpec& d);
Objective objective_from_json(const Json& j, int m);
Json to_json(const Objective& f);

/// Instance documents carry n, m, A, sense, rhs_scale, domain, objective and
/// optionally generators (domain becomes their cone) or domain_family.
/// Throws kInvalidInput on malformed documents.
GameInstance instance_from_json(const Json& j);
Json to_json(const GameInstance& g);

/// Reads and parses a JSON file. Throws kInvalidInput when unreadable.
Json read_json_file(const std::filesystem::path& path);

Json to_json(const CoreReport& r);
Json to_json(const BondarevaReport& r);
Json to_json(const ValueChain& c);
Json to_json(const EquivalenceReport& r);
Json to_json(const GammaReport& r);
Json to_json(const IsVerdict& v);
Json to_json(const MembershipCheck& m);
Json to_json(const AssortmentReport& r);
Json to_json(const ReductionCheck& r);
Json to_json(const ConflictStructure& cs);

}  // namespace coregame

#endif  // COREGAME_IO_HPP
