// Copyright 2026 The gamegraph Authors
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

#include <fstream>
#include <sstream>

#include "oracles.hpp"

namespace {

using gg::Json;
using gg::Rational;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class FixtureRoundTrip : public ::testing::TestWithParam<const char*> {};

TEST_P(FixtureRoundTrip, WriteThenReadIsIdentity) {
  auto f = gg::load_game(oracle::fixture(GetParam()));
  auto j = gg::game_to_json(f);
  auto back = gg::game_from_json(j);
  EXPECT_EQ(gg::game_to_json(back).dump(), j.dump());
  EXPECT_EQ(back.arena.num_edges(), f.arena.num_edges());
  if (f.profile) {
    EXPECT_EQ(*back.profile, *f.profile);
  }
}

INSTANTIATE_TEST_SUITE_P(Fixtures, FixtureRoundTrip,
                         ::testing::Values("fig1_boolean.json", "fig2_weighted.json", "fig3_one_player.json",
                                           "fig6_not_secure.json", "fig7_not_spe.json"));

TEST(Io, EveryObjectiveTypeRoundTrips) {
  std::mt19937 rng(61);
  auto a = oracle::random_arena(rng, 5, 1, 0);
  for (auto type : oracle::kAllObjTypes) {
    auto o = oracle::random_objective(rng, 5, type);
    auto j = gg::objective_to_json(a, o);
    auto back = gg::objective_from_json(a, j);
    EXPECT_EQ(gg::objective_to_json(a, back), j) << j.dump();
  }
}

TEST(Io, RationalsAndPayoffs) {
  std::mt19937 rng(62);
  auto a = oracle::random_arena(rng, 3, 1, 2);
  auto spec = gg::payoff_from_json(a, Json::parse(R"({"type":"discounted","weights":2,"lambda":"3/4"})"));
  EXPECT_EQ(spec.kind, gg::PayoffKind::Discounted);
  EXPECT_EQ(spec.profile, 1u);
  EXPECT_EQ(spec.lambda, Rational(3, 4));
  EXPECT_EQ(gg::payoff_from_json(a, gg::payoff_to_json(a, spec)).lambda, spec.lambda);
  EXPECT_EQ(gg::to_wire(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(gg::parse_rational("4/-2"), -2);
  EXPECT_THROW(gg::payoff_from_json(a, Json::parse(R"({"type":"limsup","weights":3})")), gg::InputError);
  EXPECT_THROW(gg::payoff_from_json(a, Json::parse(R"({"type":"average","weights":1})")), gg::InputError);
}

TEST(Io, RejectsUnknownFieldsAndBadReferences) {
  auto base = gg::read_json_file(oracle::fixture("fig2_weighted.json"));
  auto extra = base;
  extra["colour"] = "blue";
  EXPECT_THROW(gg::game_from_json(extra), gg::InputError);
  auto edge = base;
  edge["edges"][0]["cost"] = 1;
  EXPECT_THROW(gg::game_from_json(edge), gg::InputError);
  auto dangling = base;
  dangling["edges"][0]["to"] = "v9";
  EXPECT_THROW(gg::game_from_json(dangling), gg::InputError);
  auto owner = base;
  owner["vertices"][0]["owner"] = 3;
  EXPECT_THROW(gg::game_from_json(owner), std::invalid_argument);
  EXPECT_THROW(gg::parse_json_text("{\"players\": ", "inline"), gg::InputError);
}

TEST(Io, WitnessRoundTripAndTamperDetection) {
  auto f = gg::load_game(oracle::fixture("fig2_weighted.json"));
  auto g = f.game();
  auto w = gg::construct_ne(g, 0);
  auto j = gg::witness_to_json(f.arena, w);
  auto back = gg::witness_from_json(g, j, 0);
  EXPECT_EQ(back.outcome, w.outcome);
  EXPECT_EQ(back.payoffs, w.payoffs);
  EXPECT_EQ(back.profile, w.profile);
  auto bare = gg::witness_from_json(g, j["profile"], 0);
  EXPECT_EQ(bare.outcome, w.outcome);
  j["outcome"] = gg::lasso_to_json(f.arena, gg::Lasso{{}, {0, 1}});
  EXPECT_THROW(gg::witness_from_json(g, j, 0), gg::InputError);
}

TEST(Dot, ValuesGoldenMatchesFixture) {
  auto f = gg::load_game(oracle::fixture("fig2_weighted.json"));
  auto vm = gg::coalition_values(f.game(), 0);
  gg::DotOverlay overlay;
  overlay.profile = &*f.profile;
  overlay.values = &vm.values;
  EXPECT_EQ(gg::to_dot(f.arena, overlay), slurp(oracle::fixture("fig4_values.dot")));
}

TEST(Dot, ProfileGoldenMatchesFixture) {
  auto f = gg::load_game(oracle::fixture("fig6_not_secure.json"));
  gg::DotOverlay overlay;
  overlay.profile = &*f.profile;
  EXPECT_EQ(gg::to_dot(f.arena, overlay), slurp(oracle::fixture("fig6_profile.dot")));
}

}  // namespace
