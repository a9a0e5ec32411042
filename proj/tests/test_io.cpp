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
#include <gtest/gtest.h>

#include <vector>

#include "coregame/error.hpp"
#include "coregame/families.hpp"
#include "coregame/io.hpp"
#include "support/oracles.hpp"

namespace coregame {
namespace {

using testing::Rng;

void expect_invalid(const std::function<void()>& body) {
  try {
    body();
    FAIL() << "malformed input accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidInput);
  }
}

TEST(IoTest, RationalsRideAsStrings) {
  EXPECT_EQ(rational_from_json(Json(3)), Rational(3));
  EXPECT_EQ(rational_from_json(Json("-7/14")), Rational(-1, 2));
  EXPECT_EQ(to_json(Rational(2, 6)), Json("1/3"));
  expect_invalid([] { rational_from_json(Json(0.5)); });
  expect_invalid([] { rational_from_json(Json("1/0")); });
  expect_invalid([] { matrix_from_json(Json::parse("[[1,2],[3]]")); });
}

TEST(IoTest, ReadsFourPlayerFile) {
  const GameInstance g =
      instance_from_json(read_json_file(std::filesystem::path(COREGAME_TEST_DATA) / "four_cycle_core.json"));
  EXPECT_EQ(g.players(), 4);
  EXPECT_EQ(g.dimension(), 4);
  EXPECT_EQ(nu(g, Coalition::grand(4)), Rational(2));
  EXPECT_EQ(eval(g.objective, from_std({1, 1, 0, 0})), Rational(1));
}

TEST(IoTest, RejectsMalformedInstances) {
  expect_invalid([] { instance_from_json(Json::parse(R"({"n":1})")); });
  expect_invalid([] {
    instance_from_json(Json::parse(
        R"({"n":1,"m":1,"A":[[1]],"sense":"sideways","domain":{"kind":"boolean"},"objective":{"kind":"linear","c":[1]}})"));
  });
  expect_invalid([] {
    instance_from_json(Json::parse(
        R"({"n":1,"m":1,"A":[[1]],"sense":"packing","domain":{"kind":"mystery"},"objective":{"kind":"linear","c":[1]}})"));
  });
  try {
    instance_from_json(Json::parse(
        R"({"n":2,"m":1,"A":[[1]],"sense":"packing","domain":{"kind":"boolean"},"objective":{"kind":"linear","c":[1]}})"));
    FAIL() << "row count mismatch accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kDimensionMismatch);
  }
  expect_invalid([] { read_json_file("/nonexistent/instance.json"); });
}

void expect_round_trip(const GameInstance& g) {
  const Json first = to_json(g);
  const GameInstance back = instance_from_json(Json::parse(first.dump()));
  EXPECT_EQ(to_json(back), first);
  const auto lhs = nu_all(g);
  const auto rhs = nu_all(back);
  EXPECT_EQ(lhs, rhs);
}

TEST(IoTest, FamilyInstancesRoundTrip) {
  expect_round_trip(portfolio_game(from_std({3, 2}), identity(2), Rational(2)));
  expect_round_trip(assortment_game(from_std({1, 2, 3}), from_std({1, 1, 2})));
  const WeightedGraph p3 = make_graph(3, {{0, 1}, {1, 2}});
  RatMatrix q(2, 2);
  q << 0, -1, -1, 0;
  expect_round_trip(quadratic_matching_game(p3, ones(2), q));
}

TEST(IoTest, VariantDomainsAndObjectivesRoundTrip) {
  RatMatrix gens(2, 1);
  gens << 1, 1;
  expect_round_trip(GameInstance(identity(2), GameSense::kPacking,
                                 generator_cone(boolean_domain(2), gens), Objective::linear(ones(2))));
  expect_round_trip(GameInstance(identity(2), GameSense::kPacking, integer_box(2, 2),
                                 Objective::sum({Objective::linear(ones(2)),
                                                 Objective::scaled(Rational(1, 2),
                                                                   Objective::linear(ones(2)))}),
                                 Rational(2)));
  std::map<Coalition, DomainPtr> family;
  for (std::uint64_t w = 0; w < 4; ++w) {
    family[Coalition(2, w)] = std::make_shared<DomainSpec>(boolean_domain(2));
  }
  expect_round_trip(GameInstance(identity(2), GameSense::kPacking, coalition_indexed(2, family),
                                 Objective::max(Objective::linear(from_std({1, 0})),
                                                Objective::linear(from_std({0, 1})))));
  expect_round_trip(GameInstance(identity(2), GameSense::kCovering, boolean_cardinality(2, 2),
                                 Objective::linear(ones(2))));
}

TEST(IoProperty, RandomQuadraticAndRatioRoundTrip) {
  Rng rng(401);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.uniform(1, 3);
    const int m = rng.uniform(1, 4);
    RatVector b(m), d(m);
    for (int j = 0; j < m; ++j) {
      b(j) = rng.rational(0, 3, 7);
      d(j) = rng.rational(0, 2, 5);
    }
    const RatMatrix a = testing::random_binary(rng, n, m);
    const Objective f = rng.coin() ? Objective::quadratic(b, testing::random_submodular_q(rng, m))
                                   : Objective::ratio(b, d, rng.rational(1, 2));
    const GameSense sense = rng.coin() ? GameSense::kPacking : GameSense::kPartition;
    expect_round_trip(GameInstance(a, sense, boolean_domain(m), f));
  }
}

}  // namespace
}  // namespace coregame
