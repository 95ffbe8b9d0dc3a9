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
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "gg/detail/game_graph.hpp"
#include "gg/objectives.hpp"

namespace gg::detail {

struct Attractor {
  Mask region;
  Choice choice;  // for `player` vertices in region \ target: a successor one layer closer
};

/// Least set inside `alive` from which `player` forces a visit to `target`.
/// Layered: every vertex added in round k has a successor added earlier, and
/// the attracting player's choice is its lowest-indexed such successor.
inline Attractor attractor(const GameGraph& g, const Mask& alive, int player, const Mask& target) {
  const std::size_t n = g.size();
  Attractor a{Mask(n, false), Choice(n, kNone)};
  std::vector<std::size_t> count(n, 0), round(n, kNone);
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v])
      for (auto s : g.succ[v])
        if (alive[s]) ++count[v];
  std::vector<std::size_t> layer;
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v] && target[v]) {
      a.region[v] = true;
      round[v] = 0;
      layer.push_back(v);
    }
  for (std::size_t k = 1; !layer.empty(); ++k) {
    std::vector<std::size_t> next;
    for (auto u : layer)
      for (auto p : g.pred[u]) {
        if (!alive[p] || a.region[p]) continue;
        if (g.side[p] == player || --count[p] == 0) {
          a.region[p] = true;
          round[p] = k;
          next.push_back(p);
        }
      }
    for (auto p : next)
      if (g.side[p] == player)
        for (auto s : g.succ[p])
          if (alive[s] && round[s] < k && (a.choice[p] == kNone || s < a.choice[p])) a.choice[p] = s;
    layer = std::move(next);
  }
  return a;
}

/// Regions of side 0 (`win`) and positional strategies of both sides, each
/// defined on that side's vertices of its own winning region.
struct Regions {
  Mask win;
  Choice choice;
};

inline std::size_t first_in(const GameGraph& g, std::size_t v, const Mask& m) {
  std::size_t best = kNone;
  for (auto s : g.succ[v])
    if (m[s] && (best == kNone || s < best)) best = s;
  return best;
}

/// Regions for "player visits target at least once" (side 0 is the
/// protagonist; `player` says whose target it is).
inline Regions solve_reach(const GameGraph& g, const Mask& target, int player) {
  const std::size_t n = g.size();
  Mask all(n, true);
  auto a = attractor(g, all, player, target);
  Regions r{Mask(n), Choice(n, kNone)};
  Mask rest(n);
  for (std::size_t v = 0; v < n; ++v) rest[v] = !a.region[v];
  for (std::size_t v = 0; v < n; ++v) {
    r.win[v] = (player == 0) == bool(a.region[v]);
    if (a.region[v]) {
      if (g.side[v] == player) r.choice[v] = target[v] ? first_in(g, v, all) : a.choice[v];
    } else if (g.side[v] != player) {
      r.choice[v] = first_in(g, v, rest);
    }
  }
  return r;
}

/// Büchi for `player` (visit `target` infinitely often) inside `alive`, by
/// repeated attractor. Returns the player's region and both strategies.
inline std::pair<Mask, Choice> buchi_region(const GameGraph& g, Mask alive, int player, const Mask& target) {
  const std::size_t n = g.size();
  Choice choice(n, kNone);
  const int other = 1 - player;
  while (true) {
    Mask t(n);
    for (std::size_t v = 0; v < n; ++v) t[v] = alive[v] && target[v];
    auto reach = attractor(g, alive, player, t);
    Mask trap(n);
    bool any = false;
    for (std::size_t v = 0; v < n; ++v) {
      trap[v] = alive[v] && !reach.region[v];
      any = any || trap[v];
    }
    if (!any) {
      for (std::size_t v = 0; v < n; ++v)
        if (alive[v] && g.side[v] == player)
          choice[v] = target[v] ? first_in(g, v, alive) : reach.choice[v];
      return {alive, choice};
    }
    // The opponent keeps the play inside the trap, then attracts to it.
    auto lose = attractor(g, alive, other, trap);
    for (std::size_t v = 0; v < n; ++v) {
      if (!lose.region[v]) continue;
      if (g.side[v] == other) choice[v] = trap[v] ? first_in(g, v, trap) : lose.choice[v];
      alive[v] = false;
    }
  }
}

inline Regions solve_buchi(const GameGraph& g, const Mask& target, int player) {
  const std::size_t n = g.size();
  auto [region, choice] = buchi_region(g, Mask(n, true), player, target);
  Regions r{Mask(n), choice};
  for (std::size_t v = 0; v < n; ++v) r.win[v] = (player == 0) == bool(region[v]);
  return r;
}

/// Zielonka's recursive algorithm for max-parity (side 0 wins on even).
/// Returns win (side 0) and strategies of both sides on their regions.
inline void zielonka(const GameGraph& g, const std::vector<unsigned>& color, const Mask& alive,
                     Mask& win0, Choice& choice) {
  const std::size_t n = g.size();
  bool empty = true;
  unsigned d = 0;
  for (std::size_t v = 0; v < n; ++v)
    if (alive[v]) {
      d = empty ? color[v] : std::max(d, color[v]);
      empty = false;
    }
  if (empty) return;
  const int p = d % 2 == 0 ? 0 : 1;
  Mask top(n);
  for (std::size_t v = 0; v < n; ++v) top[v] = alive[v] && color[v] == d;
  auto a = attractor(g, alive, p, top);
  Mask sub(n);
  for (std::size_t v = 0; v < n; ++v) sub[v] = alive[v] && !a.region[v];
  Mask w0(n, false);
  Choice c(n, kNone);
  zielonka(g, color, sub, w0, c);
  Mask opp(n, false);  // region of 1-p in the subgame
  bool opp_empty = true;
  for (std::size_t v = 0; v < n; ++v)
    if (sub[v] && ((p == 0) != bool(w0[v]))) {
      opp[v] = true;
      opp_empty = false;
    }
  if (opp_empty) {
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      win0[v] = p == 0;
      if (g.side[v] != p) continue;
      if (sub[v]) choice[v] = c[v];
      else if (top[v]) choice[v] = first_in(g, v, alive);
      else choice[v] = a.choice[v];
    }
    return;
  }
  auto b = attractor(g, alive, 1 - p, opp);
  Mask rest(n);
  for (std::size_t v = 0; v < n; ++v) rest[v] = alive[v] && !b.region[v];
  Mask w0b(n, false);
  Choice cb(n, kNone);
  zielonka(g, color, rest, w0b, cb);
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    if (b.region[v]) {
      win0[v] = p != 0;
      if (g.side[v] == 1 - p) choice[v] = opp[v] ? c[v] : b.choice[v];
    } else {
      win0[v] = w0b[v];
      choice[v] = cb[v];
    }
  }
}

inline Regions solve_parity(const GameGraph& g, const std::vector<unsigned>& color) {
  const std::size_t n = g.size();
  Regions r{Mask(n, false), Choice(n, kNone)};
  zielonka(g, color, Mask(n, true), r.win, r.choice);
  return r;
}

/// Boolean solution over graph vertices: side-0 region and a Mealy strategy
/// per side (positional unless the objective needed LAR memory).
struct BooleanSolution {
  Mask win;
  MealyStrategy strategy[2];
};

inline BooleanSolution positional_solution(const GameGraph& g, const Regions& r) {
  BooleanSolution s;
  s.win = r.win;
  Choice c = r.choice;
  // Totalize: outside its region a side still needs some move for simulation.
  for (std::size_t v = 0; v < g.size(); ++v)
    if (c[v] == kNone) c[v] = *std::min_element(g.succ[v].begin(), g.succ[v].end());
  Choice c0(g.size(), kNone), c1(g.size(), kNone);
  for (std::size_t v = 0; v < g.size(); ++v) (g.side[v] == 0 ? c0 : c1)[v] = c[v];
  s.strategy[0] = positional_strategy(0, c0);
  s.strategy[1] = positional_strategy(1, c1);
  return s;
}

/// Muller-type objectives through the latest appearance record. Product
/// states are (v, record before v) with the record a permutation of the labels
/// seen in the objective. The record is the strategy memory.
inline BooleanSolution solve_lar(const GameGraph& g, const Objective& obj, Budget& budget) {
  const std::size_t n = g.size();
  const std::size_t k = g.universe(obj);
  using Record = std::vector<std::uint8_t>;
  if (k > 255) throw std::invalid_argument("LAR limited to 255 labels");
  Record id(k);
  for (std::size_t i = 0; i < k; ++i) id[i] = static_cast<std::uint8_t>(i);

  std::map<Record, std::size_t> records;
  std::vector<Record> record_list;
  auto record_index = [&](const Record& r) {
    auto [it, fresh] = records.emplace(r, record_list.size());
    if (fresh) record_list.push_back(r);
    return it->second;
  };
  auto advance = [&](const Record& r, Vertex label, std::size_t& h) {
    Record out = r;
    auto it = std::find(out.begin(), out.end(), static_cast<std::uint8_t>(label));
    h = static_cast<std::size_t>(it - out.begin());
    std::rotate(out.begin(), it, it + 1);
    return out;
  };

  GameGraph p;
  std::vector<unsigned> color;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;  // (v, record) -> state
  std::vector<std::pair<std::size_t, std::size_t>> states;
  std::vector<std::size_t> work;
  auto intern = [&](std::size_t v, std::size_t rec) {
    auto [it, fresh] = index.emplace(std::pair(v, rec), states.size());
    if (fresh) {
      budget.spend();
      states.emplace_back(v, rec);
      work.push_back(it->second);
    }
    return it->second;
  };
  const std::size_t id_index = record_index(id);
  for (std::size_t v = 0; v < n; ++v) intern(v, id_index);
  std::vector<std::vector<std::size_t>> succ;
  while (!work.empty()) {
    auto s = work.back();
    work.pop_back();
    auto [v, rec] = states[s];
    std::size_t h = 0;
    Record next = advance(record_list[rec], g.label[v], h);
    VertexSet recent(k);
    for (std::size_t i = 0; i <= h; ++i) recent.set(next[i]);
    unsigned c = static_cast<unsigned>(wins_inf(obj, recent) ? 2 * h + 2 : 2 * h + 1);
    auto nr = record_index(next);
    std::vector<std::size_t> out;
    for (auto w : g.succ[v]) out.push_back(intern(w, nr));
    if (succ.size() <= s) {
      succ.resize(states.size());
      color.resize(states.size());
    }
    succ[s] = std::move(out);
    color[s] = c;
  }
  succ.resize(states.size());
  color.resize(states.size());
  p.succ = std::move(succ);
  p.side.resize(states.size());
  p.label.resize(states.size());
  for (std::size_t s = 0; s < states.size(); ++s) {
    p.side[s] = g.side[states[s].first];
    p.label[s] = states[s].first;
  }
  p.finalize();
  auto r = solve_parity(p, color);

  BooleanSolution out;
  out.win.assign(n, false);
  for (std::size_t v = 0; v < n; ++v) out.win[v] = r.win[index.at({v, id_index})];
  const std::size_t m = record_list.size();
  for (int side = 0; side < 2; ++side) {
    MealyStrategy st(static_cast<Player>(side), m, n);
    st.initial = id_index;
    for (std::size_t rec = 0; rec < m; ++rec)
      for (std::size_t v = 0; v < n; ++v) {
        std::size_t h = 0;
        auto known = records.find(advance(record_list[rec], g.label[v], h));
        st.updates[rec][v] = known == records.end() ? rec : known->second;
        if (g.side[v] != side) continue;
        auto it = index.find({v, rec});
        Vertex mv = kNone;
        if (it != index.end() && r.choice[it->second] != kNone) mv = states[r.choice[it->second]].first;
        if (mv == kNone) mv = *std::min_element(g.succ[v].begin(), g.succ[v].end());
        st.moves[rec][v] = mv;
      }
    out.strategy[side] = std::move(st);
  }
  return out;
}

/// Side 0 plays for `obj` (labels are arena vertices) against side 1.
inline BooleanSolution solve_boolean_graph(const GameGraph& g, const Objective& obj, Budget& budget) {
  const std::size_t n = g.size();
  auto lift = [&](const VertexSet& s) {
    Mask m(n);
    for (std::size_t v = 0; v < n; ++v) m[v] = s.test(g.label[v]);
    return m;
  };
  return std::visit(
      [&](const auto& x) -> BooleanSolution {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Reachability>) {
          return positional_solution(g, solve_reach(g, lift(x.target), 0));
        } else if constexpr (std::is_same_v<T, Safety>) {
          return positional_solution(g, solve_reach(g, lift(x.avoid), 1));
        } else if constexpr (std::is_same_v<T, Buchi>) {
          return positional_solution(g, solve_buchi(g, lift(x.set), 0));
        } else if constexpr (std::is_same_v<T, CoBuchi>) {
          return positional_solution(g, solve_buchi(g, lift(x.set), 1));
        } else if constexpr (std::is_same_v<T, Parity>) {
          std::vector<unsigned> color(n);
          for (std::size_t v = 0; v < n; ++v) color[v] = x.colors[g.label[v]];
          return positional_solution(g, solve_parity(g, color));
        } else {
          return solve_lar(g, obj, budget);
        }
      },
      obj);
}

}  // namespace gg::detail
