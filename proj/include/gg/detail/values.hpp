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

// Quantitative zero-sum values on game graphs. Side 0 maximizes the payoff
// read from GameGraph::weight, side 1 minimizes it. Every solver returns
// exact values together with positional choices for both sides.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "gg/detail/boolean.hpp"
#include "gg/detail/game_graph.hpp"
#include "gg/payoffs.hpp"

namespace gg::detail {

struct Values {
  std::vector<Rational> value;
  Choice choice;  // every vertex, for whichever side owns it
};

inline std::size_t lowest_succ(const GameGraph& g, std::size_t v) {
  return *std::min_element(g.succ[v].begin(), g.succ[v].end());
}

// ---------------------------------------------------------------------------
// Sup, Inf, LimSup, LimInf: descending thresholds over the subdivided graph.

inline Values solve_threshold_kind(const GameGraph& g, PayoffKind kind) {
  const std::size_t n = g.size();
  // Subdivide: vertex n + e sits in the middle of the e-th edge.
  GameGraph s;
  s.succ.resize(n);
  s.side = g.side;
  s.label = g.label;
  std::vector<Rational> mid_weight;
  std::vector<std::size_t> mid_target;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t k = 0; k < g.succ[u].size(); ++k) {
      const std::size_t m = n + mid_weight.size();
      s.succ[u].push_back(m);
      mid_weight.push_back(g.weight[u][k]);
      mid_target.push_back(g.succ[u][k]);
    }
  for (std::size_t e = 0; e < mid_weight.size(); ++e) {
    s.succ.push_back({mid_target[e]});
    s.side.push_back(0);
    s.label.push_back(g.label[mid_target[e]]);
  }
  s.finalize();
  const std::size_t total = s.size();

  std::set<Rational> distinct(mid_weight.begin(), mid_weight.end());
  std::vector<Rational> thresholds(distinct.rbegin(), distinct.rend());  // descending

  Values out{std::vector<Rational>(n, thresholds.back()), Choice(n, kNone)};
  std::vector<bool> fixed(n, false);
  // Opponent choices come from the game at the next threshold above the value.
  Choice opponent_prev(n, kNone);
  for (std::size_t ti = 0; ti < thresholds.size(); ++ti) {
    const Rational& t = thresholds[ti];
    Regions r;
    if (ti + 1 == thresholds.size()) {
      r.win.assign(total, true);
      r.choice.assign(total, kNone);
    } else {
      Mask good(total, false), bad(total, false);
      for (std::size_t e = 0; e < mid_weight.size(); ++e) {
        good[n + e] = mid_weight[e] >= t;
        bad[n + e] = mid_weight[e] < t;
      }
      switch (kind) {
        case PayoffKind::Sup: r = solve_reach(s, good, 0); break;
        case PayoffKind::Inf: r = solve_reach(s, bad, 1); break;
        case PayoffKind::LimSup: r = solve_buchi(s, good, 0); break;
        case PayoffKind::LimInf: r = solve_buchi(s, bad, 1); break;
        default: throw std::logic_error("not a threshold payoff");
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (fixed[v] || !r.win[v]) continue;
      fixed[v] = true;
      out.value[v] = t;
      if (g.side[v] == 0 && r.choice[v] != kNone) out.choice[v] = mid_target[r.choice[v] - n];
      if (g.side[v] == 1 && opponent_prev[v] != kNone) out.choice[v] = mid_target[opponent_prev[v] - n];
    }
    for (std::size_t v = 0; v < n; ++v)
      if (g.side[v] == 1 && !r.win[v]) opponent_prev[v] = r.choice[v];
  }
  for (std::size_t v = 0; v < n; ++v)
    if (out.choice[v] == kNone) out.choice[v] = lowest_succ(g, v);
  return out;
}

// ---------------------------------------------------------------------------
// Discounted sum: exact policy evaluation and strategy improvement.

/// Discounted payoff from every vertex when everybody follows `choice`.
inline std::vector<Rational> evaluate_discounted(const GameGraph& g, const Choice& choice,
                                                 const Rational& lambda) {
  const std::size_t n = g.size();
  std::vector<std::optional<Rational>> x(n);
  std::vector<int> state(n, 0);  // 0 new, 1 on current walk, 2 done
  auto step_w = [&](std::size_t v) -> const Rational& { return g.w(v, choice[v]); };
  for (std::size_t start = 0; start < n; ++start) {
    if (x[start]) continue;
    std::vector<std::size_t> walk;
    std::size_t v = start;
    while (state[v] == 0) {
      state[v] = 1;
      walk.push_back(v);
      v = choice[v];
    }
    std::size_t stop = walk.size();
    if (state[v] == 1) {
      // Cycle from v to the end of the walk.
      auto it = std::find(walk.begin(), walk.end(), v);
      std::size_t c0 = static_cast<std::size_t>(it - walk.begin());
      Rational sum = 0, p = 1;
      for (std::size_t i = c0; i < walk.size(); ++i) {
        sum += step_w(walk[i]) * p;
        p *= lambda;
      }
      x[walk[c0]] = sum / (1 - p);
      for (std::size_t i = walk.size(); i-- > c0 + 1;) {
        std::size_t u = walk[i];
        x[u] = step_w(u) + lambda * *x[choice[u]];
      }
      stop = c0;
    }
    for (std::size_t i = stop; i-- > 0;) {
      std::size_t u = walk[i];
      x[u] = step_w(u) + lambda * *x[choice[u]];
    }
    for (auto u : walk) state[u] = 2;
  }
  std::vector<Rational> out(n);
  for (std::size_t v = 0; v < n; ++v) out[v] = *x[v];
  return out;
}

/// One round of switching for `side`: at each of its vertices move to the
/// best successor if that is strictly better than the current value.
inline bool improve(const GameGraph& g, Choice& choice, const std::vector<Rational>& x,
                    const Rational& lambda, int side) {
  bool changed = false;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.side[v] != side || g.succ[v].size() < 2) continue;
    std::size_t best = kNone;
    Rational best_val;
    auto succ = g.succ[v];
    std::sort(succ.begin(), succ.end());
    for (auto s : succ) {
      Rational c = g.w(v, s) + lambda * x[s];
      if (best == kNone || (side == 0 ? c > best_val : c < best_val)) {
        best = s;
        best_val = c;
      }
    }
    if (side == 0 ? best_val > x[v] : best_val < x[v]) {
      choice[v] = best;
      changed = true;
    }
  }
  return changed;
}

inline Values solve_discounted(const GameGraph& g, const Rational& lambda, Budget& budget) {
  const std::size_t n = g.size();
  Choice choice(n);
  for (std::size_t v = 0; v < n; ++v) choice[v] = lowest_succ(g, v);
  std::vector<Rational> x;
  while (true) {
    // Best response of side 1 against the current side-0 choices.
    while (true) {
      budget.spend();
      x = evaluate_discounted(g, choice, lambda);
      if (!improve(g, choice, x, lambda, 1)) break;
    }
    if (!improve(g, choice, x, lambda, 0)) break;
  }
  return {x, choice};
}

// ---------------------------------------------------------------------------
// Mean payoff: value iteration proposes positional pairs, which are accepted
// only once certified optimal by one-player cycle analysis.

/// Certifies a positional pair: with side 0 fixed the minimizer cannot go
/// below `lo`, with side 1 fixed the maximizer cannot exceed `hi`. The pair is
/// optimal iff lo == hi everywhere, which are then the values.
inline std::optional<std::vector<Rational>> certify_mean_payoff(const GameGraph& g, const Choice& choice) {
  auto lo = reachable_cycle_means(restrict_to_choice(g, choice, 0), true).value;
  auto hi = reachable_cycle_means(restrict_to_choice(g, choice, 1), false).value;
  if (lo != hi) return std::nullopt;
  return lo;
}

inline Values solve_mean_payoff(const GameGraph& g, Budget& budget) {
  const std::size_t n = g.size();
  std::vector<Rational> x(n, Rational(0));
  std::optional<Choice> tried;
  auto greedy = [&]() {
    Choice c(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto succ = g.succ[v];
      std::sort(succ.begin(), succ.end());
      std::size_t best = kNone;
      Rational best_val;
      for (auto s : succ) {
        Rational val = g.w(v, s) + x[s];
        if (best == kNone || (g.side[v] == 0 ? val > best_val : val < best_val)) {
          best = s;
          best_val = val;
        }
      }
      c[v] = best;
    }
    return c;
  };
  const std::size_t rounds = 16 * n * n + 64;
  for (std::size_t k = 0; k < rounds; ++k) {
    budget.spend();
    Choice c = greedy();
    if (!tried || c != *tried) {
      tried = c;
      if (auto vals = certify_mean_payoff(g, c)) return {*vals, c};
    }
    std::vector<Rational> nx(n);
    for (std::size_t v = 0; v < n; ++v) nx[v] = g.w(v, c[v]) + x[c[v]];
    x = std::move(nx);
  }
  // Fallback: discount-optimal strategies are mean-payoff optimal once the
  // discount factor is close enough to 1.
  for (unsigned j = 1; j <= 512; ++j) {
    Rational lambda = 1 - Rational(1, Integer(1) << j);
    auto d = solve_discounted(g, lambda, budget);
    if (auto vals = certify_mean_payoff(g, d.choice)) return {*vals, d.choice};
  }
  throw std::logic_error("mean-payoff certification failed");
}

/// Values for any quantitative kind (side 0 maximizes).
inline Values solve_values_graph(const GameGraph& g, const PayoffSpec& spec, Budget& budget) {
  switch (spec.kind) {
    case PayoffKind::Sup:
    case PayoffKind::Inf:
    case PayoffKind::LimSup:
    case PayoffKind::LimInf: return solve_threshold_kind(g, spec.kind);
    case PayoffKind::MeanPayoffSup:
    case PayoffKind::MeanPayoffInf: return solve_mean_payoff(g, budget);
    case PayoffKind::Discounted: return solve_discounted(g, spec.lambda, budget);
    case PayoffKind::Boolean: break;
  }
  throw std::logic_error("Boolean payoffs go through solve_boolean_graph");
}

}  // namespace gg::detail
