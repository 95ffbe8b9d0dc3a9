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

#include "oracles.hpp"

namespace {

using gg::Lasso;
using gg::Rational;

gg::Arena triangle() {
  gg::ArenaSpec s;
  s.players = 2;
  s.owner = {0, 1, 0};
  s.weight_profiles = 1;
  s.edges = {{0, 1, {1}}, {1, 2, {2}}, {2, 0, {3}}, {1, 0, {-1}}};
  return gg::Arena(s);
}

TEST(Arena, RejectsDeadEndsAndBadOwners) {
  gg::ArenaSpec s;
  s.players = 2;
  s.owner = {0, 2};
  s.edges = {{0, 1, {}}};
  auto issues = gg::validate(s);
  EXPECT_EQ(issues.size(), 2u);
  EXPECT_THROW(gg::Arena{s}, gg::InvalidArena);
}

TEST(Arena, RejectsDuplicateEdges) {
  gg::ArenaSpec s;
  s.owner = {0};
  s.edges = {{0, 0, {}}, {0, 0, {}}};
  EXPECT_THROW(gg::Arena{s}, gg::InvalidArena);
}

TEST(Arena, SuccessorsSortedAndNamed) {
  auto a = triangle();
  EXPECT_EQ(a.successors(1), (std::vector<gg::Vertex>{0, 2}));
  EXPECT_EQ(a.predecessors(0), (std::vector<gg::Vertex>{1, 2}));
  EXPECT_EQ(a.vertex("v2"), 2u);
  EXPECT_EQ(a.name(1), "v1");
  EXPECT_EQ(a.num_edges(), 4u);
}

TEST(Lasso, NormalizeRollsPrefixIntoCycle) {
  Lasso l{{0, 1, 2, 0}, {1, 2, 0}};
  auto n = gg::normalize(l);
  EXPECT_TRUE(n.prefix.empty());
  EXPECT_EQ(n.cycle, (std::vector<gg::Vertex>{0, 1, 2}));
  Lasso twice{{}, {0, 1, 0, 1}};
  EXPECT_EQ(gg::normalize(twice).cycle, (std::vector<gg::Vertex>{0, 1}));
}

TEST(Lasso, AtSuffixAndInfSet) {
  Lasso l{{2}, {0, 1}};
  EXPECT_EQ(l.at(0), 2u);
  EXPECT_EQ(l.at(3), 0u);
  EXPECT_EQ(l.at(4), 1u);
  EXPECT_EQ(l.suffix(2).cycle, (std::vector<gg::Vertex>{1, 0}));
  EXPECT_EQ(l.inf_set(), (std::vector<gg::Vertex>{0, 1}));
  EXPECT_TRUE(l.is_simple());
  EXPECT_FALSE((Lasso{{0}, {1, 0}}).is_simple());
}

TEST(Lasso, Validity) {
  auto a = triangle();
  EXPECT_TRUE(gg::is_valid_lasso(a, {{}, {0, 1, 2}}));
  EXPECT_TRUE(gg::is_valid_lasso(a, {{0}, {1, 0}}));
  EXPECT_FALSE(gg::is_valid_lasso(a, {{}, {0, 2}}));
  EXPECT_FALSE(gg::is_valid_lasso(a, {{0}, {}}));
}

TEST(Mealy, OutcomeFollowsMovesThenUpdates) {
  auto a = triangle();
  // Player 2 at v1 alternates: back to v0 first, then on to v2. Memory is
  // updated on every vertex, so state 1 has to be kept explicitly at v0.
  gg::MealyStrategy p2(1, 2, 3);
  p2.updates[1][0] = 1;
  p2.moves[0][1] = 0;
  p2.updates[0][1] = 1;
  p2.moves[1][1] = 2;
  p2.updates[1][1] = 0;
  auto p1 = gg::positional_strategy(0, {1, gg::kNone, 0});
  auto play = gg::outcome(a, {p1, p2}, 0);
  EXPECT_EQ(gg::normalize(play).cycle, (std::vector<gg::Vertex>{0, 1, 0, 1, 2}));
  EXPECT_TRUE(gg::check_strategy(a, p2).empty());
}

TEST(Mealy, MissingMoveThrows) {
  auto a = triangle();
  auto p1 = gg::positional_strategy(0, {1, gg::kNone, gg::kNone});
  auto p2 = gg::positional_strategy(1, {gg::kNone, 2, gg::kNone});
  EXPECT_THROW(gg::outcome(a, {p1, p2}, 0), gg::MissingMove);
}

TEST(Mealy, CheckStrategyFlagsNonEdges) {
  auto a = triangle();
  auto bad = gg::positional_strategy(0, {2, gg::kNone, 0});
  EXPECT_FALSE(gg::check_strategy(a, bad).empty());
}

TEST(Lasso, SimpleEnumerationMatchesOracle) {
  std::mt19937 rng(11);
  for (int t = 0; t < 50; ++t) {
    auto a = oracle::random_arena(rng, static_cast<std::size_t>(oracle::uniform(rng, 1, 5)), 2, 0);
    auto mine = gg::enumerate_simple_lassos(a, 0);
    for (auto& l : mine) l = gg::normalize(l);
    std::sort(mine.begin(), mine.end());
    auto ref = oracle::simple_lassos(a, 0);
    std::sort(ref.begin(), ref.end());
    EXPECT_EQ(mine, ref) << "instance " << t;
  }
}

TEST(Graph, SccsMatchKosaraju) {
  std::mt19937 rng(12);
  for (int t = 0; t < 50; ++t) {
    auto a = oracle::random_arena(rng, static_cast<std::size_t>(oracle::uniform(rng, 1, 7)), 1, 0);
    std::vector<std::vector<std::size_t>> succ;
    oracle::LabeledGraph g;
    for (gg::Vertex v = 0; v < a.num_vertices(); ++v) {
      succ.emplace_back(a.successors(v).begin(), a.successors(v).end());
      g.succ.push_back(a.successors(v));
      g.label.push_back(v);
    }
    auto mine = gg::tarjan_sccs(succ, std::vector<bool>(a.num_vertices(), true));
    auto ref = oracle::components(g, std::vector<bool>(a.num_vertices(), true));
    for (auto& c : mine) std::sort(c.begin(), c.end());
    for (auto& c : ref) std::sort(c.begin(), c.end());
    std::sort(mine.begin(), mine.end());
    std::sort(ref.begin(), ref.end());
    EXPECT_EQ(mine, ref);
  }
}

}  // namespace
