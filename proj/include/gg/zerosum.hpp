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

#pragma once

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gg/arena.hpp"
#include "gg/budget.hpp"
#include "gg/detail/boolean.hpp"
#include "gg/detail/game_graph.hpp"
#include "gg/detail/values.hpp"
#include "gg/objectives.hpp"
#include "gg/payoffs.hpp"

namespace gg {

/// Result of a Boolean two-player solve. `protagonist` wins from `w1`, the
/// coalition of the other players from `w2`. strategy_p1 plays for the
/// protagonist, strategy_p2 for the coalition (player kCoalition); each wins
/// from every vertex of its region.
struct WinningRegions {
  Player protagonist = 0;
  std::vector<bool> w1, w2;
  MealyStrategy strategy_p1, strategy_p2;
};

/// Values of the protagonist's game with optimal strategies for both sides.
struct ValueMap {
  Player protagonist = 0;
  std::vector<Rational> values;
  MealyStrategy strategy_p1, strategy_p2;
};

/// Attractor of `player` to `target` in the arena (other players oppose).
/// Returns the region and a positional strategy defined on region \ target.
inline std::pair<std::vector<bool>, MealyStrategy> attractor(const Arena& arena, Player player,
                                                            const std::vector<bool>& target) {
  auto g = detail::from_arena(arena, player);
  auto a = detail::attractor(g, detail::Mask(arena.num_vertices(), true), 0, target);
  return {a.region, positional_strategy(player, a.choice)};
}

namespace detail {

inline std::pair<MealyStrategy, MealyStrategy> split_sides(const GameGraph& g, const Choice& c,
                                                           Player protagonist) {
  Choice c0(g.size(), kNone), c1(g.size(), kNone);
  for (std::size_t v = 0; v < g.size(); ++v) (g.side[v] == 0 ? c0 : c1)[v] = c[v];
  return {positional_strategy(protagonist, c0), positional_strategy(MealyStrategy::kCoalition, c1)};
}

}  // namespace detail

inline WinningRegions solve_boolean(const Arena& arena, const Objective& objective, Player protagonist,
                                    Budget budget = Budget(default_budget(), "LAR product")) {
  auto issues = check_objective(objective, arena.num_vertices());
  if (!issues.empty()) throw std::invalid_argument("invalid objective: " + issues.front());
  auto g = detail::from_arena(arena, protagonist);
  auto sol = detail::solve_boolean_graph(g, objective, budget);
  WinningRegions r;
  r.protagonist = protagonist;
  r.w1 = sol.win;
  r.w2.resize(sol.win.size());
  for (std::size_t v = 0; v < sol.win.size(); ++v) r.w2[v] = !sol.win[v];
  r.strategy_p1 = std::move(sol.strategy[0]);
  r.strategy_p1.player = protagonist;
  r.strategy_p2 = std::move(sol.strategy[1]);
  r.strategy_p2.player = MealyStrategy::kCoalition;
  return r;
}

namespace detail {

/// Payoff kind seen by a maximizer when the original player minimizes.
inline PayoffKind dual_kind(PayoffKind k) {
  switch (k) {
    case PayoffKind::Sup: return PayoffKind::Inf;
    case PayoffKind::Inf: return PayoffKind::Sup;
    case PayoffKind::LimSup: return PayoffKind::LimInf;
    case PayoffKind::LimInf: return PayoffKind::LimSup;
    case PayoffKind::MeanPayoffSup: return PayoffKind::MeanPayoffInf;
    case PayoffKind::MeanPayoffInf: return PayoffKind::MeanPayoffSup;
    default: return k;
  }
}

/// Values on a graph for any payoff spec, side 0 optimizing under `pref`.
/// Minimization is handled by negating weights and dualizing the kind.
inline Values solve_spec_graph(const GameGraph& g, const PayoffSpec& spec, const Preference& pref,
                               Budget& budget) {
  const bool minimize = pref.kind == Preference::Kind::Minimize;
  if (spec.is_boolean()) {
    Objective o = minimize ? complement(*spec.objective, g.universe(*spec.objective)) : *spec.objective;
    auto sol = solve_boolean_graph(g, o, budget);
    if (!sol.strategy[0].positional() || !sol.strategy[1].positional())
      throw std::invalid_argument("objective needs memory; use solve_boolean");
    Values v;
    v.choice.assign(g.size(), kNone);
    for (std::size_t x = 0; x < g.size(); ++x) {
      v.value.push_back(sol.win[x] != minimize ? Rational(1) : Rational(0));
      v.choice[x] = sol.strategy[g.side[x]].moves[0][x];
    }
    return v;
  }
  if (!minimize) return solve_values_graph(g, spec, budget);
  PayoffSpec d = spec;
  d.kind = dual_kind(spec.kind);
  auto v = solve_values_graph(negate_weights(g), d, budget);
  for (auto& x : v.value) x = -x;
  return v;
}

}  // namespace detail

/// Value of every vertex in the protagonist's zero-sum game (the other
/// players form the opposing coalition), with uniform optimal strategies.
/// Boolean payoffs give 0/1 values; objectives that need memory (Rabin,
/// Streett, Muller) must go through solve_boolean instead.
inline ValueMap quantitative_values(const Arena& arena, const PayoffSpec& spec, Player protagonist,
                                    Preference pref = Preference::maximize(),
                                    Budget budget = Budget(default_budget(), "value solving")) {
  auto issues = check_payoff(spec, arena);
  if (!issues.empty()) throw std::invalid_argument("invalid payoff: " + issues.front());
  std::optional<std::size_t> profile;
  if (!spec.is_boolean()) profile = spec.profile;
  auto g = detail::from_arena(arena, protagonist, profile);
  auto v = detail::solve_spec_graph(g, spec, pref, budget);
  ValueMap m;
  m.protagonist = protagonist;
  m.values = std::move(v.value);
  std::tie(m.strategy_p1, m.strategy_p2) = detail::split_sides(g, v.choice, protagonist);
  return m;
}

/// Payoff of a play, supplied by the caller.
using LassoPayoff = std::function<Rational(const Lasso&)>;

namespace detail {

struct MixingResult {
  std::vector<Rational> value;
  Choice choice;
};

/// The recursion from the fairly-mixing proof. Splits the lowest vertex with
/// two or more edges (preferring vertices of `split_side`), moving its lowest
/// edge into E' and the rest into E'', and keeps the subgame whose value at
/// the split vertex its owner prefers (E' on ties).
inline MixingResult mixing_recurse(GameGraph& g, int split_side, const LassoPayoff& payoff,
                                   const Preference& pref, Budget& budget) {
  const std::size_t n = g.size();
  std::size_t split = kNone;
  for (std::size_t v = 0; v < n && split == kNone; ++v)
    if (g.succ[v].size() >= 2 && g.side[v] == split_side) split = v;
  for (std::size_t v = 0; v < n && split == kNone; ++v)
    if (g.succ[v].size() >= 2) split = v;
  if (split == kNone) {
    budget.spend();
    MixingResult r;
    r.choice.resize(n);
    for (std::size_t v = 0; v < n; ++v) r.choice[v] = g.succ[v][0];
    for (std::size_t v = 0; v < n; ++v) r.value.push_back(payoff(project(g, play_choice(g, r.choice, v))));
    return r;
  }
  auto saved = g.succ[split];
  std::sort(g.succ[split].begin(), g.succ[split].end());
  auto all = g.succ[split];
  g.succ[split] = {all[0]};
  auto first = mixing_recurse(g, split_side, payoff, pref, budget);
  g.succ[split].assign(all.begin() + 1, all.end());
  auto second = mixing_recurse(g, split_side, payoff, pref, budget);
  g.succ[split] = saved;
  Order o = compare(pref, second.value[split], first.value[split]);
  bool take_second = g.side[split] == 0 ? o == Order::Greater : o == Order::Less;
  return take_second ? second : first;
}

}  // namespace detail

/// Generic solver for fairly-mixing payoffs, following the inductive proof:
/// exponential in |E| - |V|, so only for small arenas. The caller vouches
/// that the payoff is fairly mixing. Run once splitting protagonist vertices
/// first (giving its strategy and the values) and once splitting coalition
/// vertices first (giving theirs); the two runs must agree on the values.
inline ValueMap fairly_mixing_solve(const Arena& arena, Player protagonist, const LassoPayoff& payoff,
                                    Preference pref = Preference::maximize(),
                                    Budget budget = Budget(default_budget(), "fairly-mixing recursion")) {
  auto g = detail::from_arena(arena, protagonist);
  auto a = detail::mixing_recurse(g, 0, payoff, pref, budget);
  auto b = detail::mixing_recurse(g, 1, payoff, pref, budget);
  if (a.value != b.value)
    throw std::domain_error("split orders disagree: the payoff is not fairly mixing on this arena");
  detail::Choice c(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) c[v] = g.side[v] == 0 ? a.choice[v] : b.choice[v];
  ValueMap m;
  m.protagonist = protagonist;
  m.values = std::move(a.value);
  std::tie(m.strategy_p1, m.strategy_p2) = detail::split_sides(g, c, protagonist);
  return m;
}

namespace detail {

inline Product fix_protagonist(const Arena& arena, Player protagonist, const MealyStrategy& strategy,
                               const std::vector<Vertex>& roots, std::optional<std::size_t> profile,
                               Budget& budget) {
  Mask controls(arena.num_vertices());
  for (Vertex v = 0; v < arena.num_vertices(); ++v) controls[v] = arena.owner(v) == protagonist;
  std::vector<int> sides(arena.num_players(), 1);
  sides[protagonist] = 0;
  return build_product(arena, {{&strategy, controls}}, sides, roots, profile, budget);
}

}  // namespace detail

/// Checks that `strategy` wins `objective` for the protagonist from every
/// vertex of `region`: the strategy is fixed in a product with its memory and
/// the coalition tries to falsify the objective there.
inline bool verify_winning(const Arena& arena, const Objective& objective, Player protagonist,
                           const MealyStrategy& strategy, const std::vector<Vertex>& region,
                           Budget budget = Budget(default_budget(), "verification product")) {
  if (region.empty()) return true;
  auto p = detail::fix_protagonist(arena, protagonist, strategy, region, {}, budget);
  auto sol = detail::solve_boolean_graph(p.graph, objective, budget);
  std::vector<std::size_t> init(1, strategy.initial);
  for (Vertex v : region)
    if (!sol.win[p.at(v, init)]) return false;
  return true;
}

/// Checks that `strategy` guarantees a payoff at least `threshold` (under the
/// protagonist's preference) from every vertex of `region`.
inline bool verify_threshold(const Arena& arena, const PayoffSpec& spec, Player protagonist,
                             const MealyStrategy& strategy, const Rational& threshold,
                             const std::vector<Vertex>& region, Preference pref = Preference::maximize(),
                             Budget budget = Budget(default_budget(), "verification product")) {
  if (region.empty()) return true;
  std::optional<std::size_t> profile;
  if (!spec.is_boolean()) profile = spec.profile;
  auto p = detail::fix_protagonist(arena, protagonist, strategy, region, profile, budget);
  auto vals = detail::solve_spec_graph(p.graph, spec, pref, budget);
  std::vector<std::size_t> init(1, strategy.initial);
  for (Vertex v : region)
    if (!weakly_below(pref, threshold, vals.value[p.at(v, init)])) return false;
  return true;
}

}  // namespace gg
