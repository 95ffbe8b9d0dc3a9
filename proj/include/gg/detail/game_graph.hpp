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

// Two-sided game graphs used internally by every solver. Arena-level entry
// points translate an Arena (plus fixed strategies, memory, or subdivision)
// into a GameGraph, solve there, and project results back through `label`.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <utility>
#include <vector>

#include "gg/arena.hpp"
#include "gg/budget.hpp"
#include "gg/objectives.hpp"
#include "gg/rational.hpp"

namespace gg::detail {

using Mask = std::vector<bool>;
using Choice = std::vector<std::size_t>;  // chosen successor per vertex, kNone if unset

struct GameGraph {
  std::vector<std::vector<std::size_t>> succ;
  std::vector<std::vector<std::size_t>> pred;
  std::vector<int> side;     // 0 = protagonist, 1 = opponent
  std::vector<Vertex> label;  // arena vertex each graph vertex stands for
  std::vector<std::vector<Rational>> weight;  // aligned with succ; empty if unweighted

  std::size_t size() const { return succ.size(); }

  void finalize() {
    pred.assign(succ.size(), {});
    for (std::size_t u = 0; u < succ.size(); ++u)
      for (auto v : succ[u]) pred[v].push_back(u);
  }

  const Rational& w(std::size_t u, std::size_t v) const {
    const auto& s = succ[u];
    auto it = std::find(s.begin(), s.end(), v);
    if (it == s.end()) throw std::logic_error("no such graph edge");
    return weight[u][static_cast<std::size_t>(it - s.begin())];
  }

  /// Number of arena vertices the labels range over. An objective may not
  /// carry that size itself (an empty Muller family).
  std::size_t universe(const Objective& o) const {
    std::size_t n = objective_size(o);
    for (auto l : label) n = std::max(n, l + 1);
    return n;
  }
};

/// The arena seen by `protagonist` against the coalition of everybody else.
/// Weights come from `profile` when given.
inline GameGraph from_arena(const Arena& arena, Player protagonist,
                            std::optional<std::size_t> profile = {}) {
  GameGraph g;
  const std::size_t n = arena.num_vertices();
  g.succ.resize(n);
  g.side.resize(n);
  g.label.resize(n);
  if (profile) g.weight.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    g.succ[v] = arena.successors(v);
    g.side[v] = arena.owner(v) == protagonist ? 0 : 1;
    g.label[v] = v;
    if (profile)
      for (Vertex s : g.succ[v]) g.weight[v].push_back(arena.weight(*profile, v, s));
  }
  g.finalize();
  return g;
}

inline GameGraph negate_weights(GameGraph g) {
  for (auto& ws : g.weight)
    for (auto& x : ws) x = -x;
  return g;
}

inline GameGraph swap_sides(GameGraph g) {
  for (auto& s : g.side) s = 1 - s;
  return g;
}

// ---------------------------------------------------------------------------
// Products with finite-memory strategies

/// A strategy fixed inside a product, with the vertices it decides.
struct FixedStrategy {
  const MealyStrategy* strategy;
  Mask controls;  // over arena vertices
};

struct Product {
  GameGraph graph;
  std::vector<std::vector<std::size_t>> memory;  // memory tuple per product vertex
  std::map<std::pair<Vertex, std::vector<std::size_t>>, std::size_t> index;

  std::size_t at(Vertex v, const std::vector<std::size_t>& mem) const {
    auto it = index.find({v, mem});
    if (it == index.end()) throw std::logic_error("configuration not in product");
    return it->second;
  }
};

/// Arena x memories of the fixed strategies, restricted to configurations
/// reachable from (root, initial memories). Vertices decided by a fixed
/// strategy get its single move; the others keep all arena successors and take
/// side `free_side[owner]`.
inline Product build_product(const Arena& arena, const std::vector<FixedStrategy>& fixed,
                             const std::vector<int>& free_side, const std::vector<Vertex>& roots,
                             std::optional<std::size_t> profile, Budget& budget) {
  Product p;
  std::vector<std::size_t> init;
  for (const auto& f : fixed) init.push_back(f.strategy->initial);
  std::vector<std::size_t> work;
  auto intern = [&](Vertex v, const std::vector<std::size_t>& mem) {
    auto [it, fresh] = p.index.emplace(std::pair(v, mem), p.graph.succ.size());
    if (fresh) {
      budget.spend();
      p.graph.succ.emplace_back();
      p.graph.side.push_back(free_side[arena.owner(v)]);
      p.graph.label.push_back(v);
      if (profile) p.graph.weight.emplace_back();
      p.memory.push_back(mem);
      work.push_back(it->second);
    }
    return it->second;
  };
  for (Vertex r : roots) intern(r, init);
  while (!work.empty()) {
    std::size_t u = work.back();
    work.pop_back();
    const Vertex v = p.graph.label[u];
    const auto mem = p.memory[u];
    std::vector<std::size_t> next_mem(mem.size());
    for (std::size_t i = 0; i < fixed.size(); ++i) next_mem[i] = fixed[i].strategy->update(mem[i], v);
    std::vector<Vertex> targets;
    bool forced = false;
    for (std::size_t i = 0; i < fixed.size(); ++i) {
      if (!fixed[i].controls[v]) continue;
      auto mv = fixed[i].strategy->move(mem[i], v);
      if (!mv || !arena.has_edge(v, *mv))
        throw MissingMove("fixed strategy has no legal move at " + arena.name(v));
      targets = {*mv};
      forced = true;
      break;
    }
    if (!forced) targets = arena.successors(v);
    std::vector<std::size_t> succ;
    std::vector<Rational> ws;
    for (Vertex t : targets) {
      succ.push_back(intern(t, next_mem));
      if (profile) ws.push_back(arena.weight(*profile, v, t));
    }
    p.graph.succ[u] = std::move(succ);
    if (profile) p.graph.weight[u] = std::move(ws);
  }
  p.graph.finalize();
  return p;
}

// ---------------------------------------------------------------------------
// Plays on graphs

/// Lasso (over graph vertices) of the play where side 0 follows s0 and side 1
/// follows s1, both Mealy machines over graph vertices.
inline Lasso play_graph(const GameGraph& g, const MealyStrategy& s0, const MealyStrategy& s1,
                        std::size_t start) {
  std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> seen;
  std::vector<Vertex> play;
  std::size_t m0 = s0.initial, m1 = s1.initial, v = start;
  while (true) {
    auto [it, fresh] = seen.emplace(std::tuple(m0, m1, v), play.size());
    if (!fresh) {
      Lasso l;
      l.prefix.assign(play.begin(), play.begin() + static_cast<std::ptrdiff_t>(it->second));
      l.cycle.assign(play.begin() + static_cast<std::ptrdiff_t>(it->second), play.end());
      return l;
    }
    play.push_back(v);
    std::optional<Vertex> next;
    if (g.succ[v].size() == 1) next = g.succ[v][0];
    else next = (g.side[v] == 0 ? s0 : s1).move(g.side[v] == 0 ? m0 : m1, v);
    if (!next) throw std::logic_error("graph strategy undefined on a reached vertex");
    m0 = s0.update(m0, v);
    m1 = s1.update(m1, v);
    v = *next;
  }
}

inline Lasso play_choice(const GameGraph& g, const Choice& choice, std::size_t start) {
  auto s = positional_strategy(0, choice);
  return play_graph(g, s, s, start);
}

inline Lasso project(const GameGraph& g, const Lasso& l) {
  Lasso out;
  for (auto v : l.prefix) out.prefix.push_back(g.label[v]);
  for (auto v : l.cycle) out.cycle.push_back(g.label[v]);
  return normalize(std::move(out));
}

/// Graph fixed by a positional choice on the given side(s); other vertices keep
/// all successors.
inline GameGraph restrict_to_choice(const GameGraph& g, const Choice& choice, int fixed_side) {
  GameGraph h = g;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.side[v] != fixed_side || choice[v] == kNone) continue;
    auto it = std::find(g.succ[v].begin(), g.succ[v].end(), choice[v]);
    if (it == g.succ[v].end()) throw std::logic_error("choice is not a successor");
    auto k = static_cast<std::size_t>(it - g.succ[v].begin());
    h.succ[v] = {choice[v]};
    if (!g.weight.empty()) h.weight[v] = {g.weight[v][k]};
  }
  h.finalize();
  return h;
}

// ---------------------------------------------------------------------------
// Mean cycles

struct MeanCycle {
  Rational value;
  std::vector<std::size_t> cycle;  // graph vertices, in order
};

/// Karp's maximum mean cycle inside one strongly connected component
/// (vertices `comp`, edges restricted to it), with a witness cycle extracted
/// from the tight edges of longest-path potentials.
inline MeanCycle max_mean_cycle_in_component(const GameGraph& g, const std::vector<std::size_t>& comp) {
  const std::size_t m = comp.size();
  std::map<std::size_t, std::size_t> local;
  for (std::size_t i = 0; i < m; ++i) local[comp[i]] = i;
  struct E { std::size_t from, to; Rational w; };
  std::vector<E> edges;
  for (std::size_t i = 0; i < m; ++i) {
    const auto u = comp[i];
    for (std::size_t k = 0; k < g.succ[u].size(); ++k) {
      auto it = local.find(g.succ[u][k]);
      if (it != local.end()) edges.push_back({i, it->second, g.weight[u][k]});
    }
  }
  if (edges.empty()) throw std::logic_error("component without a cycle");
  // D[k][v]: maximum weight of a walk with exactly k edges from comp[0] to v.
  std::vector<std::vector<std::optional<Rational>>> D(m + 1, std::vector<std::optional<Rational>>(m));
  D[0][0] = Rational(0);
  for (std::size_t k = 1; k <= m; ++k)
    for (const auto& e : edges)
      if (D[k - 1][e.from]) {
        Rational c = *D[k - 1][e.from] + e.w;
        if (!D[k][e.to] || c > *D[k][e.to]) D[k][e.to] = c;
      }
  std::optional<Rational> best;
  for (std::size_t v = 0; v < m; ++v) {
    if (!D[m][v]) continue;
    std::optional<Rational> worst;
    for (std::size_t k = 0; k < m; ++k) {
      if (!D[k][v]) continue;
      Rational r = (*D[m][v] - *D[k][v]) / static_cast<long long>(m - k);
      if (!worst || r < *worst) worst = r;
    }
    if (worst && (!best || *worst > *best)) best = worst;
  }
  const Rational lambda = *best;

  // Longest-path potentials for w - lambda (no positive cycles), root comp[0].
  std::vector<std::optional<Rational>> pot(m);
  pot[0] = Rational(0);
  for (std::size_t round = 0; round < m; ++round) {
    bool changed = false;
    for (const auto& e : edges)
      if (pot[e.from]) {
        Rational c = *pot[e.from] + e.w - lambda;
        if (!pot[e.to] || c > *pot[e.to]) {
          pot[e.to] = c;
          changed = true;
        }
      }
    if (!changed) break;
  }
  // Tight edges contain every critical cycle; any cycle made of tight edges is critical.
  std::vector<std::vector<std::size_t>> tight(m);
  for (const auto& e : edges)
    if (*pot[e.from] + e.w - lambda == *pot[e.to]) tight[e.from].push_back(e.to);
  for (auto& t : tight) std::sort(t.begin(), t.end());
  std::vector<int> state(m, 0);
  std::vector<std::size_t> stack;
  std::vector<std::size_t> found;
  std::function<bool(std::size_t)> dfs = [&](std::size_t u) {
    state[u] = 1;
    stack.push_back(u);
    for (auto v : tight[u]) {
      if (state[v] == 1) {
        auto it = std::find(stack.begin(), stack.end(), v);
        found.assign(it, stack.end());
        return true;
      }
      if (state[v] == 0 && dfs(v)) return true;
    }
    stack.pop_back();
    state[u] = 2;
    return false;
  };
  for (std::size_t s = 0; s < m && found.empty(); ++s)
    if (state[s] == 0) dfs(s);
  if (found.empty()) throw std::logic_error("no critical cycle among tight edges");
  MeanCycle out{lambda, {}};
  for (auto i : found) out.cycle.push_back(comp[i]);
  return out;
}

/// For every vertex, the best (max, or min when `minimize`) mean of a cycle
/// reachable from it inside the graph, with the component achieving it.
struct ReachableMeans {
  std::vector<Rational> value;
  std::vector<std::size_t> best_component;  // index into components
  std::vector<std::vector<std::size_t>> components;
  std::vector<MeanCycle> cycles;            // per component (only cyclic ones are meaningful)
};

inline ReachableMeans reachable_cycle_means(const GameGraph& g, bool minimize) {
  const std::size_t n = g.size();
  GameGraph h = minimize ? negate_weights(g) : g;
  auto comps = tarjan_sccs(h.succ, Mask(n, true));  // sinks first
  std::vector<std::size_t> comp_of(n);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (auto v : comps[c]) comp_of[v] = c;
  ReachableMeans r;
  r.components = comps;
  r.cycles.resize(comps.size());
  std::vector<std::optional<Rational>> best(comps.size());
  std::vector<std::size_t> arg(comps.size(), kNone);
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (is_cyclic_component(h.succ, comps[c])) {
      r.cycles[c] = max_mean_cycle_in_component(h, comps[c]);
      best[c] = r.cycles[c].value;
      arg[c] = c;
    }
    for (auto u : comps[c])
      for (auto v : h.succ[u]) {
        auto d = comp_of[v];
        if (d == c || !best[d]) continue;
        if (!best[c] || *best[d] > *best[c] || (*best[d] == *best[c] && arg[d] < arg[c])) {
          best[c] = best[d];
          arg[c] = arg[d];
        }
      }
  }
  r.value.resize(n);
  r.best_component.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!best[comp_of[v]]) throw std::logic_error("vertex without reachable cycle");
    r.value[v] = minimize ? Rational(-*best[comp_of[v]]) : *best[comp_of[v]];
    r.best_component[v] = arg[comp_of[v]];
  }
  if (minimize)
    for (auto& c : r.cycles) c.value = -c.value;
  return r;
}

/// Shortest path from `from` to any vertex of `to` within `alive`, as a vertex
/// sequence including both ends. BFS over sorted successor order.
inline std::vector<std::size_t> shortest_path(const GameGraph& g, std::size_t from, const Mask& to,
                                              const Mask& alive) {
  std::vector<std::size_t> parent(g.size(), kNone);
  std::vector<bool> seen(g.size(), false);
  std::vector<std::size_t> queue{from};
  seen[from] = true;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    auto u = queue[qi];
    if (to[u]) {
      std::vector<std::size_t> path;
      for (auto x = u; x != kNone; x = parent[x]) path.push_back(x);
      std::reverse(path.begin(), path.end());
      return path;
    }
    auto succ = g.succ[u];
    std::sort(succ.begin(), succ.end());
    for (auto v : succ)
      if (alive[v] && !seen[v]) {
        seen[v] = true;
        parent[v] = u;
        queue.push_back(v);
      }
  }
  return {};
}

/// Lasso from `start` that reaches the cycle `cycle` (which must be reachable)
/// and loops on it forever.
inline Lasso lasso_to_cycle(const GameGraph& g, std::size_t start, const std::vector<std::size_t>& cycle) {
  Mask target(g.size(), false);
  for (auto v : cycle) target[v] = true;
  auto path = shortest_path(g, start, target, Mask(g.size(), true));
  if (path.empty()) throw std::logic_error("cycle not reachable");
  Lasso l;
  l.prefix.assign(path.begin(), path.end() - 1);
  auto it = std::find(cycle.begin(), cycle.end(), path.back());
  l.cycle.assign(it, cycle.end());
  l.cycle.insert(l.cycle.end(), cycle.begin(), it);
  return l;
}

}  // namespace gg::detail
