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

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gg/arena.hpp"
#include "gg/budget.hpp"
#include "gg/detail/game_graph.hpp"
#include "gg/detail/values.hpp"
#include "gg/objectives.hpp"
#include "gg/payoffs.hpp"

namespace gg {

/// Looks for a play from v0 whose payoff lies in [lower, upper] (either bound
/// may be absent). Ownership is ignored: one player controls every vertex.
struct ConstraintQuery {
  PayoffSpec spec;
  std::optional<Rational> lower, upper;
  Vertex v0 = 0;
};

namespace detail {

/// Shortest cycle through u using only `alive` vertices, as a vertex list
/// starting at u; empty if none.
inline std::vector<std::size_t> cycle_through(const GameGraph& g, std::size_t u, const Mask& alive) {
  Mask target(g.size(), false);
  target[u] = true;
  std::vector<std::size_t> best;
  auto succ = g.succ[u];
  std::sort(succ.begin(), succ.end());
  for (auto s : succ) {
    if (!alive[s]) continue;
    auto path = shortest_path(g, s, target, alive);
    if (path.empty()) continue;
    if (best.empty() || path.size() < best.size()) {
      best.assign({u});
      best.insert(best.end(), path.begin(), path.end() - 1);
    }
  }
  return best;
}

/// Closed walk through every vertex of a strongly connected `comp` (within
/// `alive`), starting at comp[0].
inline std::vector<std::size_t> covering_walk(const GameGraph& g, const std::vector<std::size_t>& comp,
                                              const Mask& alive) {
  if (comp.size() == 1) return {comp[0]};
  std::vector<std::size_t> walk{comp[0]};
  Mask inside(g.size(), false);
  for (auto v : comp) inside[v] = true;
  Mask in_alive(g.size(), false);
  for (std::size_t v = 0; v < g.size(); ++v) in_alive[v] = inside[v] && alive[v];
  for (std::size_t i = 1; i <= comp.size(); ++i) {
    std::size_t to = comp[i % comp.size()];
    Mask target(g.size(), false);
    target[to] = true;
    auto path = shortest_path(g, walk.back(), target, in_alive);
    if (path.empty()) throw std::logic_error("component is not strongly connected");
    if (path.size() == 1) {
      // Already there; for the closing step a single-vertex component
      // needs its self-loop, handled above.
      continue;
    }
    walk.insert(walk.end(), path.begin() + 1, path.end());
  }
  walk.pop_back();  // the walk returned to comp[0]
  return walk;
}

/// Lasso from `start` (prefix inside `prefix_alive`) into the closed walk
/// `cycle` (which must start at a vertex reachable from `start`).
inline std::optional<Lasso> lasso_into(const GameGraph& g, std::size_t start, const std::vector<std::size_t>& cycle,
                                       const Mask& prefix_alive) {
  Mask target(g.size(), false);
  target[cycle[0]] = true;
  auto path = shortest_path(g, start, target, prefix_alive);
  if (path.empty()) return std::nullopt;
  Lasso l;
  l.prefix.assign(path.begin(), path.end() - 1);
  l.cycle = cycle;
  return l;
}

/// Cyclic SCCs of the subgraph on `inner`, each reachable from `start`
/// through `outer` (inner should be a subset of outer).
inline std::vector<std::vector<std::size_t>> reachable_components(const GameGraph& g, std::size_t start,
                                                                  const Mask& outer, const Mask& inner) {
  if (!outer[start]) return {};
  auto reach = reachable(g.succ, {start}, outer);
  Mask live(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) live[v] = reach[v] && inner[v];
  std::vector<std::vector<std::size_t>> out;
  for (auto& c : tarjan_sccs(g.succ, live))
    if (is_cyclic_component(g.succ, c)) out.push_back(std::move(c));
  std::sort(out.begin(), out.end());
  return out;
}

/// Some play from `start` inside `alive` satisfying `obj` (labels are the
/// objective's vertices), as a lasso of graph vertices.
inline std::optional<Lasso> find_play(const GameGraph& g, std::size_t start, const Objective& obj,
                                      const Mask& alive) {
  const std::size_t n = g.size();
  if (!alive[start]) return std::nullopt;
  auto lift = [&](const VertexSet& s) {
    Mask m(n);
    for (std::size_t v = 0; v < n; ++v) m[v] = alive[v] && s.test(g.label[v]);
    return m;
  };
  auto minus = [&](const Mask& m) {
    Mask r(n);
    for (std::size_t v = 0; v < n; ++v) r[v] = alive[v] && !m[v];
    return r;
  };
  // Some cyclic component of `inner` with a vertex of `key`; witness cycles
  // through that vertex.
  auto via_key = [&](const Mask& inner, const Mask& key) -> std::optional<Lasso> {
    for (const auto& c : reachable_components(g, start, alive, inner))
      for (auto u : c)
        if (key[u]) {
          Mask cm(n, false);
          for (auto x : c) cm[x] = true;
          auto cyc = cycle_through(g, u, cm);
          if (!cyc.empty()) return lasso_into(g, start, cyc, alive);
        }
    return std::nullopt;
  };
  auto any_cycle = [&](const Mask& inner, std::size_t from) -> std::optional<Lasso> {
    auto comps = reachable_components(g, from, inner, inner);
    if (comps.empty()) return std::nullopt;
    Mask cm(n, false);
    for (auto x : comps[0]) cm[x] = true;
    auto cyc = cycle_through(g, comps[0][0], cm);
    return lasso_into(g, from, cyc, inner);
  };

  return std::visit(
      [&](const auto& x) -> std::optional<Lasso> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Reachability>) {
          auto target = lift(x.target);
          auto path = shortest_path(g, start, target, alive);
          if (path.empty()) return std::nullopt;
          auto tail = any_cycle(alive, path.back());
          if (!tail) return std::nullopt;
          Lasso l = *tail;
          l.prefix.insert(l.prefix.begin(), path.begin(), path.end() - 1);
          return l;
        } else if constexpr (std::is_same_v<T, Safety>) {
          auto ok = minus(lift(x.avoid));
          if (!ok[start]) return std::nullopt;
          return any_cycle(ok, start);
        } else if constexpr (std::is_same_v<T, Buchi>) {
          return via_key(alive, lift(x.set));
        } else if constexpr (std::is_same_v<T, CoBuchi>) {
          auto ok = minus(lift(x.set));
          for (const auto& c : reachable_components(g, start, alive, ok)) {
            Mask cm(n, false);
            for (auto y : c) cm[y] = true;
            return lasso_into(g, start, cycle_through(g, c[0], cm), alive);
          }
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, Parity>) {
          std::set<unsigned> colors;
          for (std::size_t v = 0; v < n; ++v)
            if (alive[v]) colors.insert(x.colors[g.label[v]]);
          for (unsigned e : colors) {
            if (e % 2) continue;
            Mask inner(n), key(n);
            for (std::size_t v = 0; v < n; ++v) {
              inner[v] = alive[v] && x.colors[g.label[v]] <= e;
              key[v] = alive[v] && x.colors[g.label[v]] == e;
            }
            if (auto l = via_key(inner, key)) return l;
          }
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, Rabin>) {
          for (const auto& [f, gk] : x.pairs)
            if (auto l = via_key(minus(lift(f)), lift(gk))) return l;
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, Streett>) {
          // Emerson-Lei style refinement of components.
          std::vector<Mask> work;
          for (const auto& c : reachable_components(g, start, alive, alive)) {
            Mask cm(n, false);
            for (auto y : c) cm[y] = true;
            work.push_back(cm);
          }
          while (!work.empty()) {
            Mask s = work.back();
            work.pop_back();
            Mask cut = s;
            bool bad = false;
            for (const auto& [f, gk] : x.pairs) {
              auto fm = lift(f), gm = lift(gk);
              bool hits_f = false, hits_g = false;
              for (std::size_t v = 0; v < n; ++v) {
                hits_f = hits_f || (s[v] && fm[v]);
                hits_g = hits_g || (s[v] && gm[v]);
              }
              if (!hits_f && hits_g) {
                bad = true;
                for (std::size_t v = 0; v < n; ++v)
                  if (gm[v]) cut[v] = false;
              }
            }
            std::vector<std::size_t> members_of_s;
            for (std::size_t v = 0; v < n; ++v)
              if (s[v]) members_of_s.push_back(v);
            if (!bad) return lasso_into(g, start, covering_walk(g, members_of_s, s), alive);
            for (auto& c : tarjan_sccs(g.succ, cut))
              if (is_cyclic_component(g.succ, c)) {
                Mask cm(n, false);
                for (auto y : c) cm[y] = true;
                work.push_back(cm);
              }
          }
          return std::nullopt;
        } else {
          // Muller: each member must be a reachable strongly connected set,
          // and the play must range over exactly its labels.
          for (const auto& u : x.family) {
            Mask inner = lift(u);
            for (const auto& c : reachable_components(g, start, alive, inner)) {
              VertexSet labels(u.size());
              for (auto y : c) labels.set(g.label[y]);
              if (labels != u) continue;
              Mask cm(n, false);
              for (auto y : c) cm[y] = true;
              return lasso_into(g, start, covering_walk(g, c, cm), alive);
            }
          }
          return std::nullopt;
        }
      },
      obj);
}

/// Graph with only the edges whose weight satisfies `keep`, then pruned to
/// vertices that still have an infinite continuation.
template <typename Keep>
GameGraph filter_edges(const GameGraph& g, Keep keep, Mask& live) {
  GameGraph h = g;
  for (std::size_t v = 0; v < g.size(); ++v) {
    h.succ[v].clear();
    h.weight[v].clear();
    for (std::size_t k = 0; k < g.succ[v].size(); ++k)
      if (keep(g.weight[v][k])) {
        h.succ[v].push_back(g.succ[v][k]);
        h.weight[v].push_back(g.weight[v][k]);
      }
  }
  live.assign(g.size(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (!live[v]) continue;
      bool ok = false;
      for (auto s : h.succ[v]) ok = ok || live[s];
      if (!ok) {
        live[v] = false;
        changed = true;
      }
    }
  }
  h.finalize();
  return h;
}

/// Mean-payoff closed walk with mean exactly t, built from a cycle above t
/// and a cycle below t in the same component joined by paths. The excess of
/// a walk is (sum of weights) - t * (length).
inline std::vector<std::size_t> mix_cycles(const GameGraph& g, const std::vector<std::size_t>& high,
                                           const std::vector<std::size_t>& low, const Mask& comp,
                                           const Rational& t) {
  auto excess = [&](const std::vector<std::size_t>& walk, bool closed) {
    Rational e = 0;
    std::size_t edges = closed ? walk.size() : walk.size() - 1;
    for (std::size_t i = 0; i < edges; ++i) e += g.w(walk[i], walk[(i + 1) % walk.size()]) - t;
    return e;
  };
  const std::size_t x = high[0], y = low[0];
  std::vector<std::size_t> p1{x}, p2{y};
  if (x != y) {
    Mask tx(g.size(), false), ty(g.size(), false);
    tx[x] = true;
    ty[y] = true;
    p1 = shortest_path(g, x, ty, comp);
    p2 = shortest_path(g, y, tx, comp);
  }
  const Rational B = excess(high, true), A = excess(low, true);
  const Rational c = x == y ? Rational(0) : excess(p1, false) + excess(p2, false);
  // Solve k*B + j*A + r*c = 0 over integers with k, j, r >= 1.
  Integer D = lcm(lcm(denominator(B), denominator(A)), denominator(c));
  Integer beta = numerator(B * Rational(D)), alpha = -numerator(A * Rational(D)),
          gamma = numerator(c * Rational(D));
  Integer gcd_ab = gcd(alpha, beta);
  Integer r = gcd_ab;
  Integer rhs = -r * gamma / gcd_ab;  // k*beta' - j*alpha' = rhs
  Integer bp = beta / gcd_ab, ap = alpha / gcd_ab;
  // Extended Euclid for bp * s - ap * u = 1.
  auto ext = [](Integer a, Integer b) {
    Integer x0 = 1, x1 = 0, y0 = 0, y1 = 1;
    while (b != 0) {
      Integer q = a / b;
      Integer t1 = a - q * b;
      a = b;
      b = t1;
      Integer t2 = x0 - q * x1;
      x0 = x1;
      x1 = t2;
      Integer t3 = y0 - q * y1;
      y0 = y1;
      y1 = t3;
    }
    return std::pair(x0, y0);  // bp*x0 + ap*y0 = 1
  };
  auto [s0, u0] = ext(bp, ap);
  Integer k = s0 * rhs, j = -u0 * rhs;  // bp*k - ap*j = rhs
  // Shift along (ap, bp) until both counts are at least 1.
  auto ceil_div = [](Integer a, Integer b) {  // b > 0
    Integer q = a / b;
    if (q * b < a) q += 1;
    return q;
  };
  Integer need = std::max(ceil_div(1 - k, ap), ceil_div(1 - j, bp));
  k += need * ap;
  j += need * bp;
  std::vector<std::size_t> walk;
  auto repeat = [&](const std::vector<std::size_t>& seg, Integer times) {
    for (Integer i = 0; i < times; ++i) walk.insert(walk.end(), seg.begin(), seg.end());
  };
  std::vector<std::size_t> seg1(p1.begin(), p1.end() - 1), seg2(p2.begin(), p2.end() - 1);
  repeat(high, k);
  walk.insert(walk.end(), seg1.begin(), seg1.end());
  repeat(low, j);
  walk.insert(walk.end(), seg2.begin(), seg2.end());
  for (Integer i = 1; i < r; ++i) {
    walk.insert(walk.end(), seg1.begin(), seg1.end());
    walk.insert(walk.end(), seg2.begin(), seg2.end());
  }
  return walk;
}

inline bool in_bounds(const Rational& x, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
  return (!lo || *lo <= x) && (!hi || x <= *hi);
}

/// Mean-payoff witness from `start` with mean in [lo, hi] inside `alive`.
inline std::optional<Lasso> mean_payoff_play(const GameGraph& g, std::size_t start, const std::optional<Rational>& lo,
                                             const std::optional<Rational>& hi, const Mask& alive) {
  const std::size_t n = g.size();
  for (const auto& c : reachable_components(g, start, alive, alive)) {
    Mask cm(n, false);
    for (auto y : c) cm[y] = true;
    GameGraph sub = g;
    for (std::size_t v = 0; v < n; ++v) {
      if (cm[v]) continue;
      sub.succ[v].clear();
      sub.weight[v].clear();
    }
    for (auto v : c)
      for (std::size_t k = sub.succ[v].size(); k-- > 0;)
        if (!cm[sub.succ[v][k]]) {
          sub.succ[v].erase(sub.succ[v].begin() + static_cast<std::ptrdiff_t>(k));
          sub.weight[v].erase(sub.weight[v].begin() + static_cast<std::ptrdiff_t>(k));
        }
    auto top = max_mean_cycle_in_component(sub, c);
    auto bottom = max_mean_cycle_in_component(negate_weights(sub), c);
    bottom.value = -bottom.value;
    Rational t = lo ? std::max(*lo, bottom.value) : bottom.value;
    if (t > top.value || (hi && t > *hi)) continue;
    std::vector<std::size_t> cyc;
    if (t == bottom.value) cyc = bottom.cycle;
    else if (t == top.value) cyc = top.cycle;
    else cyc = mix_cycles(sub, top.cycle, bottom.cycle, cm, t);
    return lasso_into(g, start, cyc, alive);
  }
  return std::nullopt;
}

/// Witness for Sup/Inf/LimSup/LimInf constraints.
inline std::optional<Lasso> threshold_kind_play(const GameGraph& g, std::size_t start, PayoffKind kind,
                                                const std::optional<Rational>& lo,
                                                const std::optional<Rational>& hi, const Mask& alive) {
  const std::size_t n = g.size();
  const bool is_sup = kind == PayoffKind::Sup || kind == PayoffKind::LimSup;
  // Sup-like: edges above hi are forbidden, one edge in [lo, hi] is required.
  // Inf-like: edges below lo are forbidden, one edge in [lo, hi] is required.
  Mask live;
  GameGraph h = filter_edges(g, [&](const Rational& w) { return is_sup ? (!hi || w <= *hi) : (!lo || w >= *lo); },
                             live);
  auto key_edge = [&](const Rational& w) { return in_bounds(w, lo, hi); };
  Mask ok(n);
  for (std::size_t v = 0; v < n; ++v) ok[v] = live[v] && alive[v];
  if (kind == PayoffKind::Sup || kind == PayoffKind::Inf) {
    // Path within allowed edges to a key edge (u, v) with v live, then any cycle.
    if (!ok[start]) return std::nullopt;
    auto reach = reachable(h.succ, {start}, ok);
    for (std::size_t u = 0; u < n; ++u) {
      if (!reach[u]) continue;
      for (std::size_t k = 0; k < h.succ[u].size(); ++k) {
        auto v = h.succ[u][k];
        if (!ok[v] || !key_edge(h.weight[u][k])) continue;
        Mask tu(n, false);
        tu[u] = true;
        auto path = shortest_path(h, start, tu, ok);
        auto comps = reachable_components(h, v, ok, ok);
        Mask cm(n, false);
        for (auto y : comps[0]) cm[y] = true;
        auto cyc = cycle_through(h, comps[0][0], cm);
        auto tail = lasso_into(h, v, cyc, ok);
        Lasso l = *tail;
        std::vector<std::size_t> pre(path.begin(), path.end());
        l.prefix.insert(l.prefix.begin(), pre.begin(), pre.end());
        return l;
      }
    }
    return std::nullopt;
  }
  // LimSup / LimInf: a component of allowed edges containing a key edge.
  if (!alive[start]) return std::nullopt;
  auto reach = reachable(g.succ, {start}, alive);
  for (std::size_t v = 0; v < n; ++v) ok[v] = ok[v] && reach[v];
  auto comps = tarjan_sccs(h.succ, ok);
  std::sort(comps.begin(), comps.end());
  for (const auto& c : comps) {
    if (!is_cyclic_component(h.succ, c)) continue;
    Mask cm(n, false);
    for (auto y : c) cm[y] = true;
    for (auto u : c)
      for (std::size_t k = 0; k < h.succ[u].size(); ++k) {
        auto v = h.succ[u][k];
        if (!cm[v] || !key_edge(h.weight[u][k])) continue;
        Mask tu(n, false);
        tu[u] = true;
        auto back = shortest_path(h, v, tu, cm);
        std::vector<std::size_t> cyc{u};
        cyc.insert(cyc.end(), back.begin(), back.end() - 1);
        if (v == u) cyc = {u};
        return lasso_into(g, start, cyc, alive);
      }
  }
  return std::nullopt;
}

/// Best discounted value reachable by one player from each vertex, with the
/// optimal positional choice.
inline Values one_player_discounted(const GameGraph& g, const Rational& lambda, bool minimize, Budget& budget) {
  GameGraph h = g;
  for (auto& s : h.side) s = minimize ? 1 : 0;
  return solve_discounted(h, lambda, budget);
}

inline Rational lasso_discounted(const GameGraph& g, const Lasso& l, const Rational& lambda) {
  Rational head = 0, power = 1;
  for (std::size_t i = 0; i < l.prefix.size(); ++i) {
    head += g.w(l.at(i), l.at(i + 1)) * power;
    power *= lambda;
  }
  Rational loop = 0, p = 1;
  for (std::size_t i = l.prefix.size(); i < l.prefix.size() + l.cycle.size(); ++i) {
    loop += g.w(l.at(i), l.at(i + 1)) * p;
    p *= lambda;
  }
  return head + power * loop / (1 - p);
}

/// Discounted constraint with lo < hi: depth-first over play prefixes with
/// exact pruning by the reachable [min, max] value of the remaining play.
inline std::optional<Lasso> discounted_play(const GameGraph& g, std::size_t start, const Rational& lambda,
                                            const std::optional<Rational>& lo, const std::optional<Rational>& hi,
                                            Budget& budget) {
  auto best = one_player_discounted(g, lambda, false, budget);
  auto worst = one_player_discounted(g, lambda, true, budget);
  if (!hi || !lo) {
    const bool upper_only = !lo;
    const auto& v = upper_only ? worst : best;
    const Rational& value = v.value[start];
    if (in_bounds(value, lo, hi)) return play_choice(g, v.choice, start);
    return std::nullopt;
  }
  if (*lo == *hi)
    throw std::domain_error("discounted constraint with lower = upper is the target discounted-sum problem");
  std::vector<std::size_t> path;
  std::optional<Lasso> found;
  // Need: value of the remaining play from v lies in [a, b].
  std::function<bool(std::size_t, Rational, Rational)> dfs = [&](std::size_t v, Rational a, Rational b) {
    budget.spend();
    if (worst.value[v] > b || best.value[v] < a) return false;
    for (const auto* sol : {&best, &worst}) {
      Lasso tail = play_choice(g, sol->choice, v);
      if (Rational x = lasso_discounted(g, tail, lambda); a <= x && x <= b) {
        Lasso l = tail;
        l.prefix.insert(l.prefix.begin(), path.begin(), path.end());
        found = l;
        return true;
      }
    }
    path.push_back(v);
    auto succ = g.succ[v];
    std::sort(succ.begin(), succ.end());
    for (auto s : succ) {
      Rational w = g.w(v, s);
      if (dfs(s, (a - w) / lambda, (b - w) / lambda)) return true;
    }
    path.pop_back();
    return false;
  };
  dfs(start, *lo, *hi);
  return found;
}

/// Dispatches a one-player constraint query on a graph (labels = arena
/// vertices; all moves controlled by one player).
inline std::optional<Lasso> one_player_play(const GameGraph& g, std::size_t start, const PayoffSpec& spec,
                                            const std::optional<Rational>& lo, const std::optional<Rational>& hi,
                                            const Mask& alive, Budget& budget) {
  if (lo && hi && *hi < *lo) return std::nullopt;
  if (spec.is_boolean()) {
    const bool want_one = in_bounds(1, lo, hi), want_zero = in_bounds(0, lo, hi);
    if (want_one)
      if (auto l = find_play(g, start, *spec.objective, alive)) return l;
    if (want_zero) return find_play(g, start, complement(*spec.objective, g.universe(*spec.objective)), alive);
    return std::nullopt;
  }
  switch (spec.kind) {
    case PayoffKind::Sup:
    case PayoffKind::Inf:
    case PayoffKind::LimSup:
    case PayoffKind::LimInf: return threshold_kind_play(g, start, spec.kind, lo, hi, alive);
    case PayoffKind::MeanPayoffSup:
    case PayoffKind::MeanPayoffInf: return mean_payoff_play(g, start, lo, hi, alive);
    case PayoffKind::Discounted: {
      if (std::find(alive.begin(), alive.end(), false) != alive.end())
        throw std::invalid_argument("discounted search does not support vertex restrictions");
      return discounted_play(g, start, spec.lambda, lo, hi, budget);
    }
    case PayoffKind::Boolean: break;
  }
  throw std::logic_error("unreachable");
}

inline GameGraph one_player_graph(const Arena& arena, std::optional<std::size_t> profile) {
  auto g = from_arena(arena, 0, profile);
  for (auto& s : g.side) s = 0;
  return g;
}

}  // namespace detail

/// Problem 3 for one player: a lasso from v0 with payoff in [lower, upper],
/// or nothing if no play qualifies.
inline std::optional<Lasso> solve_one_player(const Arena& arena, const ConstraintQuery& q,
                                             Budget budget = Budget(default_budget(), "one-player search")) {
  auto issues = check_payoff(q.spec, arena);
  if (!issues.empty()) throw std::invalid_argument("invalid payoff: " + issues.front());
  if (!q.lower && !q.upper) throw std::invalid_argument("constraint query needs at least one bound");
  std::optional<std::size_t> profile;
  if (!q.spec.is_boolean()) profile = q.spec.profile;
  auto g = detail::one_player_graph(arena, profile);
  auto l = detail::one_player_play(g, q.v0, q.spec, q.lower, q.upper, detail::Mask(g.size(), true), budget);
  if (!l) return std::nullopt;
  return normalize(*l);
}

struct MeanCycleResult {
  Rational value;
  std::vector<Vertex> cycle;
};

namespace detail {
inline MeanCycleResult extreme_mean_cycle(const Arena& arena, std::size_t profile, bool minimize) {
  auto g = one_player_graph(arena, profile);
  if (minimize) g = negate_weights(g);
  std::optional<MeanCycleResult> best;
  for (auto& c : tarjan_sccs(g.succ, Mask(g.size(), true))) {
    if (!is_cyclic_component(g.succ, c)) continue;
    auto mc = max_mean_cycle_in_component(g, c);
    if (!best || mc.value > best->value) best = MeanCycleResult{mc.value, mc.cycle};
  }
  if (minimize) best->value = -best->value;
  return *best;
}
}  // namespace detail

/// Cycle with maximum average weight anywhere in the arena (Karp).
inline MeanCycleResult max_mean_cycle(const Arena& arena, std::size_t profile) {
  return detail::extreme_mean_cycle(arena, profile, false);
}
inline MeanCycleResult min_mean_cycle(const Arena& arena, std::size_t profile) {
  return detail::extreme_mean_cycle(arena, profile, true);
}

// ---------------------------------------------------------------------------
// Target discounted sum

/// Digit stream certificate: t = sum_n d_n lambda^n where the digits are
/// prefix then period repeated forever, or, when no period was found within
/// the digit limit, prefix followed by a tail of exact value `remainder`
/// (t = sum_{n<|prefix|} d_n lambda^n + lambda^|prefix| * remainder).
struct DigitCertificate {
  std::vector<int> prefix;
  std::vector<int> period;
  std::optional<Rational> remainder;
};

inline Rational digits_value(const DigitCertificate& c, const Rational& lambda) {
  Rational head = 0, power = 1;
  for (int d : c.prefix) {
    head += Rational(d) * power;
    power *= lambda;
  }
  if (!c.period.empty()) {
    Rational loop = 0, p = 1;
    for (int d : c.period) {
      loop += Rational(d) * p;
      p *= lambda;
    }
    return head + power * loop / (1 - p);
  }
  return head + power * c.remainder.value_or(0);
}

inline std::string to_string(const DigitCertificate& c) {
  std::string s;
  for (int d : c.prefix) s += std::to_string(d);
  if (!c.period.empty()) {
    s += "(";
    for (int d : c.period) s += std::to_string(d);
    s += ")";
  } else if (c.remainder) {
    s += "+[" + to_text(*c.remainder) + "]";
  }
  return s;
}

struct TargetDsAnswer {
  bool yes = false;
  std::optional<DigitCertificate> certificate;
};

/// Digits {0, 1} with 1/2 <= lambda < 1: t is a discounted sum iff
/// 0 <= t <= 1/(1 - lambda). The greedy expansion (take 1 whenever the
/// remaining target is at least 1) is the certificate.
inline TargetDsAnswer target_ds_special(const Rational& t, const Rational& lambda, std::size_t max_digits = 64) {
  if (lambda < Rational(1, 2) || lambda >= 1)
    throw std::invalid_argument("target discounted sum special case needs 1/2 <= lambda < 1");
  if (t < 0) throw std::invalid_argument("target must be non-negative");
  const Rational bound = 1 / (1 - lambda);
  if (t > bound) return {false, std::nullopt};
  DigitCertificate c;
  std::map<Rational, std::size_t> seen;
  Rational x = t;
  for (std::size_t i = 0; i < max_digits; ++i) {
    if (auto it = seen.find(x); it != seen.end()) {
      c.period.assign(c.prefix.begin() + static_cast<std::ptrdiff_t>(it->second), c.prefix.end());
      c.prefix.resize(it->second);
      return {true, c};
    }
    seen.emplace(x, i);
    int d = x >= 1 ? 1 : 0;
    c.prefix.push_back(d);
    x = (x - d) / lambda;
  }
  c.remainder = x;
  return {true, c};
}

enum class Verdict { Yes, No, Unknown };

struct TargetDsSearch {
  Verdict verdict = Verdict::Unknown;
  std::optional<DigitCertificate> witness;
};

/// Bounded search for digits in {a, b} with sum_n d_n lambda^n = t. Larger
/// digit first; the remaining target must stay within the tail bounds
/// [a/(1-lambda), b/(1-lambda)]. A periodic witness is reported when the
/// remaining target repeats along the branch or equals a constant tail.
inline TargetDsSearch target_ds_bounded(int a, int b, const Rational& t, const Rational& lambda, std::size_t depth) {
  if (a >= b) throw std::invalid_argument("digits must satisfy a < b");
  if (lambda <= 0 || lambda >= 1) throw std::invalid_argument("lambda must lie in (0, 1)");
  if (depth == 0) throw std::invalid_argument("depth must be positive");
  const Rational lo = Rational(a) / (1 - lambda), hi = Rational(b) / (1 - lambda);
  TargetDsSearch out;
  bool cut = false;
  std::vector<int> digits;
  std::vector<Rational> xs;
  std::function<bool(const Rational&)> dfs = [&](const Rational& x) {
    if (x < lo || x > hi) return false;
    if (x == lo || x == hi) {
      out.witness = DigitCertificate{digits, {x == lo ? a : b}, std::nullopt};
      return true;
    }
    if (auto it = std::find(xs.begin(), xs.end(), x); it != xs.end()) {
      auto j = static_cast<std::size_t>(it - xs.begin());
      out.witness = DigitCertificate{std::vector<int>(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(j)),
                                     std::vector<int>(digits.begin() + static_cast<std::ptrdiff_t>(j), digits.end()),
                                     std::nullopt};
      return true;
    }
    if (digits.size() >= depth) {
      cut = true;
      return false;
    }
    for (int d : {b, a}) {
      xs.push_back(x);
      digits.push_back(d);
      if (dfs((x - d) / lambda)) return true;
      digits.pop_back();
      xs.pop_back();
    }
    return false;
  };
  if (dfs(t)) out.verdict = Verdict::Yes;
  else out.verdict = cut ? Verdict::Unknown : Verdict::No;
  return out;
}

}  // namespace gg
