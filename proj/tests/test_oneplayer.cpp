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

TEST(OnePlayer, FixtureNeedsARepeatedVertex) {
  auto f = gg::load_game(oracle::fixture("fig3_one_player.json"));
  const auto& a = f.arena;
  auto l = gg::solve_one_player(a, {PayoffSpec::quantitative(PayoffKind::MeanPayoffSup, 0), Rational(1), Rational(1), 0});
  ASSERT_TRUE(l);
  EXPECT_TRUE(gg::is_valid_lasso(a, *l));
  EXPECT_EQ(l->at(0), 0u);
  EXPECT_EQ(gg::payoff_of_lasso(a, PayoffSpec::quantitative(PayoffKind::MeanPayoffSup, 0), *l), 1);
  EXPECT_FALSE(l->is_simple());
}

TEST(OnePlayer, EmptyIntervalHasNoPlay) {
  auto f = gg::load_game(oracle::fixture("fig3_one_player.json"));
  auto l = gg::solve_one_player(f.arena, {PayoffSpec::quantitative(PayoffKind::LimSup, 0), Rational(3), std::nullopt, 0});
  EXPECT_FALSE(l);
  EXPECT_THROW(gg::solve_one_player(f.arena, {PayoffSpec::quantitative(PayoffKind::LimSup, 0), std::nullopt, std::nullopt, 0}),
               std::invalid_argument);
}

// Soundness against direct evaluation, and completeness against every short
// lasso the oracle can list.
TEST(OnePlayer, RandomQueriesAgreeWithLassoEnumeration) {
  std::mt19937 rng(41);
  const PayoffKind kinds[] = {PayoffKind::Sup,           PayoffKind::Inf,           PayoffKind::LimSup, PayoffKind::LimInf,
                              PayoffKind::MeanPayoffSup, PayoffKind::MeanPayoffInf, PayoffKind::Discounted};
  int found = 0;
  for (int t = 0; t < 140; ++t) {
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 5));
    auto a = oracle::random_arena(rng, n, 1, 1);
    const auto kind = kinds[t % 7];
    auto spec = kind == PayoffKind::Discounted ? PayoffSpec::discounted(0, Rational(1, 2)) : PayoffSpec::quantitative(kind, 0);
    std::optional<Rational> lo, hi;
    if (oracle::uniform(rng, 0, 2) != 0) lo = Rational(oracle::uniform(rng, -6, 6), oracle::uniform(rng, 1, 2));
    if (!lo || oracle::uniform(rng, 0, 1)) hi = (lo ? *lo : Rational(0)) + oracle::uniform(rng, 0, 2);
    auto l = gg::solve_one_player(a, {spec, lo, hi, 0});
    auto inside = [&](const Rational& x) { return (!lo || x >= *lo) && (!hi || x <= *hi); };
    if (l) {
      ++found;
      ASSERT_TRUE(gg::is_valid_lasso(a, *l));
      ASSERT_EQ(l->at(0), 0u);
      ASSERT_TRUE(inside(oracle::payoff(a, spec, *l))) << gg::payoff_name(kind) << " instance " << t;
    } else {
      for (const auto& m : oracle::lassos_up_to(a, 0, 2 * n + 2))
        ASSERT_FALSE(inside(oracle::payoff(a, spec, m))) << gg::payoff_name(kind) << " missed " << gg::to_string(a, m);
    }
  }
  EXPECT_GT(found, 20);
}

TEST(OnePlayer, BooleanObjectives) {
  std::mt19937 rng(42);
  for (int t = 0; t < 120; ++t) {
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 5));
    auto a = oracle::random_arena(rng, n, 1, 0);
    auto o = oracle::random_objective(rng, n, oracle::kAllObjTypes[t % 8]);
    auto l = gg::solve_one_player(a, {PayoffSpec::boolean(o), Rational(1), std::nullopt, 0});
    bool any = false;
    for (const auto& m : oracle::lassos_up_to(a, 0, 2 * n + 2)) any = any || oracle::satisfied(o, m, n);
    if (any) {
      ASSERT_TRUE(l) << gg::objective_name(o) << " instance " << t;
    }
    if (l) {
      ASSERT_TRUE(oracle::satisfied(o, *l, n)) << gg::objective_name(o) << " instance " << t;
    }
  }
}

TEST(MeanCycle, MatchesSimpleCycleEnumeration) {
  std::mt19937 rng(43);
  for (int t = 0; t < 60; ++t) {
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 6));
    auto a = oracle::random_arena(rng, n, 1, 1);
    std::optional<Rational> best, worst;
    for (gg::Vertex v = 0; v < n; ++v)
      for (const auto& l : oracle::simple_lassos(a, v)) {
        auto m = oracle::payoff(a, PayoffSpec::quantitative(PayoffKind::MeanPayoffSup, 0), l);
        if (!best || m > *best) best = m;
        if (!worst || m < *worst) worst = m;
      }
    auto hi = gg::max_mean_cycle(a, 0), lo = gg::min_mean_cycle(a, 0);
    EXPECT_EQ(hi.value, *best);
    EXPECT_EQ(lo.value, *worst);
    gg::Lasso c{{}, hi.cycle};
    EXPECT_TRUE(gg::is_valid_lasso(a, c));
    EXPECT_EQ(oracle::payoff(a, PayoffSpec::quantitative(PayoffKind::MeanPayoffSup, 0), c), hi.value);
  }
}

TEST(TargetDs, SpecialCaseExamples) {
  auto half = gg::target_ds_special(2, Rational(1, 2));
  ASSERT_TRUE(half.yes);
  EXPECT_EQ(gg::to_string(*half.certificate), "(1)");
  auto third = gg::target_ds_special(1, Rational(2, 3));
  ASSERT_TRUE(third.yes);
  EXPECT_EQ(gg::digits_value(*third.certificate, Rational(2, 3)), 1);
  EXPECT_FALSE(gg::target_ds_special(Rational(5, 2), Rational(1, 2)).yes);
  EXPECT_THROW(gg::target_ds_special(1, Rational(1, 3)), std::invalid_argument);
}

TEST(TargetDs, BoundedSearchCantorSet) {
  // Base 3 with digits {0, 2}: 3/4 = 0.2020... shifted by one place.
  auto yes = gg::target_ds_bounded(0, 2, Rational(3, 4), Rational(1, 3), 20);
  ASSERT_EQ(yes.verdict, gg::Verdict::Yes);
  EXPECT_EQ(gg::digits_value(*yes.witness, Rational(1, 3)), Rational(3, 4));
  auto no = gg::target_ds_bounded(0, 1, Rational(1, 4), Rational(1, 3), 20);
  EXPECT_EQ(no.verdict, gg::Verdict::No);
}

}  // namespace
