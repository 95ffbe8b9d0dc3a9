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
using gg::PayoffKind;
using gg::PayoffSpec;
using gg::Rational;

constexpr PayoffKind kQuantitative[] = {PayoffKind::Sup,           PayoffKind::Inf,           PayoffKind::LimSup,
                                        PayoffKind::LimInf,        PayoffKind::MeanPayoffSup, PayoffKind::MeanPayoffInf,
                                        PayoffKind::Discounted};

gg::Arena weighted_pair() {
  gg::ArenaSpec s;
  s.owner = {0, 0};
  s.weight_profiles = 1;
  s.edges = {{0, 0, {5}}, {0, 1, {1}}, {1, 0, {3}}, {1, 1, {-2}}};
  return gg::Arena(s);
}

TEST(Payoff, HandComputedValues) {
  auto a = weighted_pair();
  // 0 (1 1 0)^w: weights 1, then -2 3 1 repeating.
  Lasso l{{0}, {1, 1, 0}};
  auto q = [&](PayoffKind k) { return gg::payoff_of_lasso(a, PayoffSpec::quantitative(k, 0), l); };
  EXPECT_EQ(q(PayoffKind::Sup), 3);
  EXPECT_EQ(q(PayoffKind::Inf), -2);
  EXPECT_EQ(q(PayoffKind::LimSup), 3);
  EXPECT_EQ(q(PayoffKind::LimInf), -2);
  EXPECT_EQ(q(PayoffKind::MeanPayoffSup), Rational(2, 3));
  // 1 + (1/2)(-2 + 3/2 + 1/4) / (1 - 1/8)
  EXPECT_EQ(gg::payoff_of_lasso(a, PayoffSpec::discounted(0, Rational(1, 2)), l), Rational(6, 7));
}

TEST(Payoff, DiscountedPrefixShiftsByLambda) {
  auto a = weighted_pair();
  const auto spec = PayoffSpec::discounted(0, Rational(2, 3));
  Lasso tail{{}, {0}};
  Lasso l{{1}, {0}};
  EXPECT_EQ(gg::payoff_of_lasso(a, spec, tail), 15);
  EXPECT_EQ(gg::payoff_of_lasso(a, spec, l), 3 + Rational(2, 3) * 15);
}

TEST(Payoff, AgreesWithOracleOnRandomLassos) {
  std::mt19937 rng(21);
  for (int t = 0; t < 60; ++t) {
    auto a = oracle::random_arena(rng, static_cast<std::size_t>(oracle::uniform(rng, 1, 5)), 1, 2);
    for (const auto& l : oracle::lassos_up_to(a, 0, 6)) {
      for (auto k : kQuantitative) {
        auto spec = k == PayoffKind::Discounted ? PayoffSpec::discounted(1, Rational(3, 5)) : PayoffSpec::quantitative(k, 1);
        ASSERT_EQ(gg::payoff_of_lasso(a, spec, l), oracle::payoff(a, spec, l)) << gg::payoff_name(k);
      }
    }
  }
}

TEST(Objective, SatisfactionAgreesWithOracle) {
  std::mt19937 rng(22);
  for (int t = 0; t < 160; ++t) {
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 5));
    auto a = oracle::random_arena(rng, n, 1, 0);
    auto o = oracle::random_objective(rng, n, oracle::kAllObjTypes[t % 8]);
    ASSERT_TRUE(gg::check_objective(o, n).empty());
    for (const auto& l : oracle::lassos_up_to(a, 0, 6)) {
      const bool sat = oracle::satisfied(o, l, n);
      ASSERT_EQ(gg::satisfies(o, l), sat) << gg::objective_name(o);
      ASSERT_EQ(gg::satisfies(gg::complement(o, n), l), !sat) << gg::objective_name(o);
      if (gg::is_prefix_independent(o)) {
        ASSERT_EQ(gg::satisfies(gg::as_muller(o, n), l), sat) << gg::objective_name(o);
      }
      if (auto* p = std::get_if<gg::Parity>(&o)) {
        ASSERT_EQ(gg::satisfies(gg::parity_as_rabin(*p), l), sat);
        ASSERT_EQ(gg::satisfies(gg::parity_as_streett(*p), l), sat);
      }
    }
  }
}

TEST(Objective, CheckRejectsOutOfRangeSets) {
  EXPECT_FALSE(gg::check_objective(gg::Buchi{gg::make_set(3, {0})}, 4).empty());
  EXPECT_FALSE(gg::check_objective(gg::Parity{{0, 1}}, 3).empty());
}

TEST(Preference, MaximizeMinimizeAndSecure) {
  using gg::Order;
  EXPECT_EQ(gg::compare(gg::Preference::maximize(), Rational(1), Rational(2)), Order::Less);
  EXPECT_EQ(gg::compare(gg::Preference::minimize(), Rational(1), Rational(2)), Order::Greater);
  EXPECT_TRUE(gg::weakly_below(gg::Preference::minimize(), Rational(3), Rational(3)));
  std::vector<Rational> p{1, 5}, q{1, 2}, r{2, 9};
  const auto sec = gg::Preference::secure(0);
  // Same own payoff: the lower opponent payoff is preferred.
  EXPECT_EQ(gg::compare(sec, p, q), Order::Less);
  EXPECT_EQ(gg::compare(sec, q, r), Order::Less);
  EXPECT_EQ(gg::compare(gg::Preference::secure(1), p, q), Order::Greater);
  EXPECT_THROW(gg::compare(sec, std::span<const Rational>(p.data(), 1), q), std::invalid_argument);
}

TEST(Payoff, Classification) {
  using gg::PayoffClass;
  EXPECT_EQ(gg::classify(PayoffSpec::quantitative(PayoffKind::Sup, 0)), PayoffClass::ConditionOneOnly);
  EXPECT_EQ(gg::classify(PayoffSpec::quantitative(PayoffKind::MeanPayoffInf, 0)), PayoffClass::PrefixIndependent);
  EXPECT_EQ(gg::classify(PayoffSpec::discounted(0, Rational(1, 2))), PayoffClass::PrefixLinear);
  EXPECT_EQ(gg::classify(PayoffSpec::boolean(gg::Reachability{gg::make_set(2, {1})})), PayoffClass::ConditionOneOnly);
  EXPECT_EQ(gg::classify(PayoffSpec::boolean(gg::Buchi{gg::make_set(2, {1})})), PayoffClass::PrefixIndependent);
}

}  // namespace
