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

using gg::PayoffKind;
using gg::PayoffSpec;
using gg::Rational;

// v0 (player 1) chooses v1 or v2; v1 (player 2) chooses v0 or the sink v3;
// v2 is a self-loop.
gg::Arena chain() {
  gg::ArenaSpec s;
  s.players = 2;
  s.owner = {0, 1, 0, 0};
  s.weight_profiles = 1;
  s.edges = {{0, 1, {4}}, {0, 2, {1}}, {1, 0, {4}}, {1, 3, {0}}, {2, 2, {2}}, {3, 3, {-1}}};
  return gg::Arena(s);
}

TEST(Attractor, ForcesThroughOwnedVertices) {
  auto a = chain();
  std::vector<bool> target{false, false, true, false};
  auto [region, strat] = gg::attractor(a, 0, target);
  EXPECT_EQ(region, (std::vector<bool>{true, false, true, false}));
  EXPECT_EQ(strat.moves[0][0], 2u);
  auto [region2, _] = gg::attractor(a, 1, std::vector<bool>{false, false, false, true});
  EXPECT_EQ(region2, (std::vector<bool>{false, true, false, true}));
}

TEST(Boolean, BuchiAgainstSpoiler) {
  auto a = chain();
  // Visiting v0 infinitely often needs player 2's cooperation.
  auto wr = gg::solve_boolean(a, gg::Buchi{gg::make_set(4, {0})}, 0);
  EXPECT_EQ(wr.w1, (std::vector<bool>{false, false, false, false}));
  auto wr2 = gg::solve_boolean(a, gg::Buchi{gg::make_set(4, {2, 3})}, 0);
  EXPECT_EQ(wr2.w1, (std::vector<bool>{true, true, true, true}));
  EXPECT_TRUE(gg::verify_winning(a, gg::Buchi{gg::make_set(4, {2, 3})}, 0, wr2.strategy_p1, {0, 1, 2, 3}));
}

TEST(Boolean, ReachabilityNeedsNoMemoryButIsLifted) {
  auto a = chain();
  gg::Objective reach = gg::Reachability{gg::make_set(4, {1})};
  auto wr = gg::solve_boolean(a, reach, 0);
  EXPECT_EQ(wr.w1, (std::vector<bool>{true, true, false, false}));
  for (gg::Vertex v : {0u, 1u}) {
    auto g = oracle::product(a, wr.strategy_p1, 0, v);
    ASSERT_TRUE(g);
    EXPECT_TRUE(oracle::all_plays_satisfy(*g, reach, 4));
  }
}

TEST(Boolean, EmptyMullerFamilyIsLostEverywhere) {
  auto a = chain();
  auto wr = gg::solve_boolean(a, gg::make_muller({}), 0);
  EXPECT_EQ(wr.w2, (std::vector<bool>(4, true)));
  auto dual = gg::solve_boolean(a, gg::complement(gg::make_muller({}), 4), 1);
  EXPECT_EQ(dual.w1, (std::vector<bool>(4, true)));
}

TEST(Values, LimSupAndSupOnChain) {
  auto a = chain();
  auto limsup = gg::quantitative_values(a, PayoffSpec::quantitative(PayoffKind::LimSup, 0), 0);
  EXPECT_EQ(limsup.values, (std::vector<Rational>{2, -1, 2, -1}));
  auto sup = gg::quantitative_values(a, PayoffSpec::quantitative(PayoffKind::Sup, 0), 0);
  EXPECT_EQ(sup.values, (std::vector<Rational>{4, 0, 2, -1}));
  auto mp_min = gg::quantitative_values(a, PayoffSpec::quantitative(PayoffKind::MeanPayoffInf, 0), 0,
                                        gg::Preference::minimize());
  // Through v1 player 2 would keep cycling for 4, so the minimizer settles for v2.
  EXPECT_EQ(mp_min.values[0], 2);
}

TEST(Values, ThresholdCertificate) {
  auto a = chain();
  const auto spec = PayoffSpec::discounted(0, Rational(1, 2));
  auto vm = gg::quantitative_values(a, spec, 0);
  EXPECT_EQ(vm.values[2], 4);
  EXPECT_TRUE(gg::verify_threshold(a, spec, 0, vm.strategy_p1, vm.values[0], {0}));
  EXPECT_FALSE(gg::verify_threshold(a, spec, 0, vm.strategy_p1, vm.values[0] + Rational(1, 100), {0}));
}

TEST(Values, FairlyMixingMatchesOnFixture) {
  auto f = gg::load_game(oracle::fixture("fig2_weighted.json"));
  const auto spec = f.payoffs[1];
  auto direct = gg::quantitative_values(f.arena, spec, 1);
  auto mixing = gg::fairly_mixing_solve(f.arena, 1, [&](const gg::Lasso& l) { return gg::payoff_of_lasso(f.arena, spec, l); });
  EXPECT_EQ(direct.values, mixing.values);
}

TEST(Values, PositionalOracleOnRandomMultiPlayerArenas) {
  std::mt19937 rng(31);
  for (int t = 0; t < 80; ++t) {
    auto a = oracle::random_arena(rng, static_cast<std::size_t>(oracle::uniform(rng, 1, 5)), 3, 1);
    const auto kind = static_cast<PayoffKind>(oracle::uniform(rng, 0, 5));
    const auto spec = PayoffSpec::quantitative(kind, 0);
    const auto p = static_cast<gg::Player>(oracle::uniform(rng, 0, 2));
    auto vm = gg::quantitative_values(a, spec, p);
    auto ref = oracle::positional_values(a, p, [&](const gg::Lasso& l) { return oracle::payoff(a, spec, l); });
    ASSERT_EQ(vm.values, ref) << gg::payoff_name(kind) << " instance " << t;
  }
}

TEST(Budget, SmallBudgetThrows) {
  std::mt19937 rng(32);
  auto a = oracle::random_arena(rng, 6, 2, 1);
  auto f = [&](const gg::Lasso& l) { return oracle::payoff(a, PayoffSpec::quantitative(PayoffKind::LimSup, 0), l); };
  EXPECT_THROW(gg::fairly_mixing_solve(a, 0, f, gg::Preference::maximize(), gg::Budget(3, "test")), gg::BudgetExceeded);
}

}  // namespace
