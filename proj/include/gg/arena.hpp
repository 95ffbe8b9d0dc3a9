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
#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gg/rational.hpp"

namespace gg {

using Vertex = std::size_t;
using Player = std::size_t;

inline constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class InvalidArena : public std::invalid_argument {
 public:
  explicit InvalidArena(const std::string& what) : std::invalid_argument(what) {}
};

struct EdgeSpec {
  Vertex from = 0;
  Vertex to = 0;
  std::vector<Rational> weights;  // one entry per weight profile
};

/// Raw description of an arena, as read from a file or built by hand. Nothing
/// is checked until it is handed to validate() or to the Arena constructor.
struct ArenaSpec {
  std::size_t players = 1;
  std::vector<std::string> names;  // optional; defaults to v0, v1, ...
  std::vector<Player> owner;       // 0-based player per vertex
  std::vector<EdgeSpec> edges;
  std::size_t weight_profiles = 0;
};

/// Lists every violated arena invariant. An empty report means the spec can
/// be turned into an Arena.
inline std::vector<std::string> validate(const ArenaSpec& spec) {
  std::vector<std::string> issues;
  const std::size_t n = spec.owner.size();
  auto name = [&](Vertex v) {
    return v < spec.names.size() ? spec.names[v] : "v" + std::to_string(v);
  };
  if (spec.players == 0) issues.push_back("arena has no players");
  if (n == 0) issues.push_back("arena has no vertices");
  if (!spec.names.empty() && spec.names.size() != n)
    issues.push_back("vertex name count differs from vertex count");
  if (!spec.names.empty()) {
    std::set<std::string> seen;
    for (const auto& s : spec.names)
      if (!seen.insert(s).second) issues.push_back("duplicate vertex id '" + s + "'");
  }
  for (Vertex v = 0; v < n; ++v)
    if (spec.owner[v] >= spec.players)
      issues.push_back("vertex " + name(v) + " has owner " + std::to_string(spec.owner[v] + 1) +
                       " outside 1.." + std::to_string(spec.players));
  std::vector<bool> has_out(n, false);
  std::set<std::pair<Vertex, Vertex>> seen_edges;
  for (std::size_t e = 0; e < spec.edges.size(); ++e) {
    const auto& ed = spec.edges[e];
    if (ed.from >= n || ed.to >= n) {
      issues.push_back("edge " + std::to_string(e) + " references an unknown vertex");
      continue;
    }
    has_out[ed.from] = true;
    if (!seen_edges.insert({ed.from, ed.to}).second)
      issues.push_back("duplicate edge " + name(ed.from) + " -> " + name(ed.to));
    if (ed.weights.size() != spec.weight_profiles)
      issues.push_back("edge " + name(ed.from) + " -> " + name(ed.to) + " has " +
                       std::to_string(ed.weights.size()) + " weights, expected " +
                       std::to_string(spec.weight_profiles));
  }
  for (Vertex v = 0; v < n; ++v)
    if (!has_out[v]) issues.push_back("vertex " + name(v) + " has no outgoing edge");
  return issues;
}

/// Finite game arena. Immutable after construction; successor lists are sorted
/// so every "first successor" tie-break picks the lowest index.
class Arena {
 public:
  explicit Arena(ArenaSpec spec) {
    auto issues = validate(spec);
    if (!issues.empty()) {
      std::string msg = "invalid arena:";
      for (const auto& s : issues) msg += "\n  " + s;
      throw InvalidArena(msg);
    }
    players_ = spec.players;
    owner_ = std::move(spec.owner);
    profiles_ = spec.weight_profiles;
    const std::size_t n = owner_.size();
    names_ = std::move(spec.names);
    if (names_.empty())
      for (Vertex v = 0; v < n; ++v) names_.push_back("v" + std::to_string(v));
    for (Vertex v = 0; v < n; ++v) index_.emplace(names_[v], v);

    std::sort(spec.edges.begin(), spec.edges.end(),
              [](const EdgeSpec& a, const EdgeSpec& b) {
                return std::pair(a.from, a.to) < std::pair(b.from, b.to);
              });
    succ_.assign(n, {});
    pred_.assign(n, {});
    first_edge_.assign(n, 0);
    for (std::size_t e = 0; e < spec.edges.size(); ++e) {
      const auto& ed = spec.edges[e];
      if (succ_[ed.from].empty()) first_edge_[ed.from] = e;
      succ_[ed.from].push_back(ed.to);
      pred_[ed.to].push_back(ed.from);
      from_.push_back(ed.from);
      to_.push_back(ed.to);
      weights_.push_back(ed.weights);
    }
    for (auto& p : pred_) std::sort(p.begin(), p.end());
  }

  std::size_t num_players() const { return players_; }
  std::size_t num_vertices() const { return owner_.size(); }
  std::size_t num_edges() const { return from_.size(); }
  std::size_t num_weight_profiles() const { return profiles_; }

  Player owner(Vertex v) const { return owner_.at(v); }
  const std::vector<Vertex>& successors(Vertex v) const { return succ_.at(v); }
  const std::vector<Vertex>& predecessors(Vertex v) const { return pred_.at(v); }
  const std::string& name(Vertex v) const { return names_.at(v); }

  std::optional<Vertex> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  Vertex vertex(const std::string& name) const {
    auto v = find(name);
    if (!v) throw std::invalid_argument("unknown vertex '" + name + "'");
    return *v;
  }

  bool has_edge(Vertex u, Vertex v) const { return edge_id(u, v).has_value(); }

  std::optional<std::size_t> edge_id(Vertex u, Vertex v) const {
    if (u >= succ_.size()) return std::nullopt;
    const auto& s = succ_[u];
    auto it = std::lower_bound(s.begin(), s.end(), v);
    if (it == s.end() || *it != v) return std::nullopt;
    return first_edge_[u] + static_cast<std::size_t>(it - s.begin());
  }
  Vertex edge_from(std::size_t e) const { return from_.at(e); }
  Vertex edge_to(std::size_t e) const { return to_.at(e); }

  /// Weight of (u, v) in the given 0-based weight profile.
  const Rational& weight(std::size_t profile, Vertex u, Vertex v) const {
    auto e = edge_id(u, v);
    if (!e) throw std::invalid_argument("no edge " + name(u) + " -> " + name(v));
    if (profile >= profiles_)
      throw std::invalid_argument("weight profile " + std::to_string(profile + 1) + " is absent");
    return weights_[*e][profile];
  }
  const std::vector<Rational>& edge_weights(std::size_t e) const { return weights_.at(e); }

  /// Rebuilds the spec this arena was constructed from (edges in sorted order).
  ArenaSpec spec() const {
    ArenaSpec s;
    s.players = players_;
    s.names = names_;
    s.owner = owner_;
    s.weight_profiles = profiles_;
    for (std::size_t e = 0; e < from_.size(); ++e) s.edges.push_back({from_[e], to_[e], weights_[e]});
    return s;
  }

 private:
  std::size_t players_ = 0;
  std::size_t profiles_ = 0;
  std::vector<Player> owner_;
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> succ_, pred_;
  std::vector<std::size_t> first_edge_;
  std::vector<Vertex> from_, to_;
  std::vector<std::vector<Rational>> weights_;
};

// ---------------------------------------------------------------------------
// Lassos

/// Ultimately periodic play prefix . cycle^omega.
///
/// Canonical form: the cycle is primitive (not a power of a shorter word) and
/// the prefix is as short as possible, i.e. its last vertex differs from the
/// last cycle vertex. Both determine the infinite word uniquely, so two
/// canonical lassos are equal iff they describe the same play. The rotation
/// of the cycle is whatever the shortest prefix forces.
struct Lasso {
  std::vector<Vertex> prefix;
  std::vector<Vertex> cycle;

  friend bool operator==(const Lasso&, const Lasso&) = default;
  friend auto operator<=>(const Lasso&, const Lasso&) = default;

  std::size_t period_start() const { return prefix.size(); }

  /// n-th vertex of the induced play.
  Vertex at(std::size_t n) const {
    if (n < prefix.size()) return prefix[n];
    return cycle[(n - prefix.size()) % cycle.size()];
  }

  /// Vertices visited infinitely often.
  std::vector<Vertex> inf_set() const {
    std::vector<Vertex> s(cycle);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  /// Suffix starting at position k, as a lasso (not normalized).
  Lasso suffix(std::size_t k) const {
    Lasso l;
    if (k < prefix.size()) {
      l.prefix.assign(prefix.begin() + static_cast<std::ptrdiff_t>(k), prefix.end());
      l.cycle = cycle;
    } else {
      std::size_t r = (k - prefix.size()) % cycle.size();
      l.cycle.assign(cycle.begin() + static_cast<std::ptrdiff_t>(r), cycle.end());
      l.cycle.insert(l.cycle.end(), cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(r));
    }
    return l;
  }

  /// True when h.g has no repeated vertex.
  bool is_simple() const {
    std::vector<Vertex> all(prefix);
    all.insert(all.end(), cycle.begin(), cycle.end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
  }
};

inline Lasso normalize(Lasso l) {
  if (l.cycle.empty()) throw std::invalid_argument("lasso with empty cycle");
  // Reduce the cycle to its primitive root.
  const std::size_t n = l.cycle.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = l.cycle[i] == l.cycle[i - p];
    if (periodic) {
      l.cycle.resize(p);
      break;
    }
  }
  // Absorb the tail of the prefix into the cycle.
  while (!l.prefix.empty() && l.prefix.back() == l.cycle.back()) {
    l.prefix.pop_back();
    std::rotate(l.cycle.rbegin(), l.cycle.rbegin() + 1, l.cycle.rend());
  }
  return l;
}

inline std::string to_string(const Arena& arena, const Lasso& l) {
  std::string s;
  for (Vertex v : l.prefix) s += arena.name(v) + " ";
  s += "(";
  for (std::size_t i = 0; i < l.cycle.size(); ++i) s += (i ? " " : "") + arena.name(l.cycle[i]);
  return s + ")^w";
}

/// Whether every consecutive pair of the play is an arena edge.
inline bool is_valid_lasso(const Arena& arena, const Lasso& l) {
  if (l.cycle.empty()) return false;
  const std::size_t len = l.prefix.size() + l.cycle.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (l.at(i) >= arena.num_vertices()) return false;
    if (!arena.has_edge(l.at(i), l.at(i + 1))) return false;
  }
  return true;
}

/// The edges of a lasso in play order: |prefix| prefix edges (the last one
/// joins the cycle), then |cycle| cycle edges.
inline std::vector<std::pair<Vertex, Vertex>> lasso_edges(const Lasso& l) {
  std::vector<std::pair<Vertex, Vertex>> out;
  const std::size_t len = l.prefix.size() + l.cycle.size();
  for (std::size_t i = 0; i < len; ++i) out.emplace_back(l.at(i), l.at(i + 1));
  return out;
}

// ---------------------------------------------------------------------------
// Strategies

/// Finite-memory strategy as a Mealy machine. In state m at vertex v the
/// strategy plays move(m, v) (for owned vertices), then the memory becomes
/// update(m, v). The initial state does not depend on the start vertex.
///
/// `player` is a 0-based player index, or kCoalition for a strategy that plays
/// on behalf of every player except a protagonist.
struct MealyStrategy {
  static constexpr Player kCoalition = kNone;

  Player player = 0;
  std::size_t states = 1;
  std::size_t initial = 0;
  std::vector<std::vector<Vertex>> moves;        // [state][vertex], kNone when undefined
  std::vector<std::vector<std::size_t>> updates;  // [state][vertex]

  MealyStrategy() = default;
  MealyStrategy(Player p, std::size_t num_states, std::size_t num_vertices)
      : player(p), states(num_states),
        moves(num_states, std::vector<Vertex>(num_vertices, kNone)),
        updates(num_states, std::vector<std::size_t>(num_vertices, 0)) {}

  std::optional<Vertex> move(std::size_t m, Vertex v) const {
    Vertex s = moves.at(m).at(v);
    if (s == kNone) return std::nullopt;
    return s;
  }
  std::size_t update(std::size_t m, Vertex v) const { return updates.at(m).at(v); }
  bool positional() const { return states == 1; }

  friend bool operator==(const MealyStrategy&, const MealyStrategy&) = default;
};

/// Positional strategy from a successor choice per vertex (kNone = undefined).
inline MealyStrategy positional_strategy(Player p, const std::vector<Vertex>& choice) {
  MealyStrategy s(p, 1, choice.size());
  s.moves[0] = choice;
  return s;
}

inline bool controls(const MealyStrategy& s, const Arena& arena, Vertex v, Player protagonist) {
  if (s.player == MealyStrategy::kCoalition) return arena.owner(v) != protagonist;
  return arena.owner(v) == s.player;
}

/// Checks table shapes and that every defined move is an arena edge.
inline std::vector<std::string> check_strategy(const Arena& arena, const MealyStrategy& s) {
  std::vector<std::string> issues;
  const std::size_t n = arena.num_vertices();
  if (s.states == 0) issues.push_back("strategy has no memory states");
  if (s.initial >= s.states) issues.push_back("initial state out of range");
  if (s.moves.size() != s.states || s.updates.size() != s.states) {
    issues.push_back("strategy tables do not match the state count");
    return issues;
  }
  for (std::size_t m = 0; m < s.states; ++m) {
    if (s.moves[m].size() != n || s.updates[m].size() != n) {
      issues.push_back("strategy tables do not match the vertex count");
      return issues;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (s.updates[m][v] >= s.states)
        issues.push_back("update target out of range at state " + std::to_string(m));
      Vertex t = s.moves[m][v];
      if (t != kNone && !arena.has_edge(v, t))
        issues.push_back("move " + arena.name(v) + " -> " +
                         (t < n ? arena.name(t) : std::to_string(t)) + " is not an edge");
    }
  }
  return issues;
}

/// One strategy per player, indexed by player.
using StrategyProfile = std::vector<MealyStrategy>;

class MissingMove : public std::invalid_argument {
 public:
  explicit MissingMove(const std::string& what) : std::invalid_argument(what) {}
};

/// Unique play consistent with the profile from v0, as a canonical lasso. The
/// joint configuration (memories, vertex) must repeat, which yields the cycle.
inline Lasso outcome(const Arena& arena, const StrategyProfile& profile, Vertex v0) {
  if (profile.size() != arena.num_players())
    throw std::invalid_argument("profile has " + std::to_string(profile.size()) +
                                " strategies for " + std::to_string(arena.num_players()) +
                                " players");
  std::vector<std::size_t> mem(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) mem[i] = profile[i].initial;
  std::map<std::pair<std::vector<std::size_t>, Vertex>, std::size_t> seen;
  std::vector<Vertex> play;
  Vertex v = v0;
  while (true) {
    auto [it, fresh] = seen.emplace(std::pair(mem, v), play.size());
    if (!fresh) {
      Lasso l;
      l.prefix.assign(play.begin(), play.begin() + static_cast<std::ptrdiff_t>(it->second));
      l.cycle.assign(play.begin() + static_cast<std::ptrdiff_t>(it->second), play.end());
      return normalize(std::move(l));
    }
    play.push_back(v);
    const Player o = arena.owner(v);
    auto next = profile[o].move(mem[o], v);
    if (!next || !arena.has_edge(v, *next))
      throw MissingMove("strategy of player " + std::to_string(o + 1) + " has no legal move at " +
                        arena.name(v));
    for (std::size_t i = 0; i < profile.size(); ++i) mem[i] = profile[i].update(mem[i], v);
    v = *next;
  }
}

// ---------------------------------------------------------------------------
// Graph utilities

/// Calls `yield` on every simple lasso starting at v0, in DFS order over
/// sorted successors. A simple lasso corresponds to a simple path whose last
/// vertex has a successor already on the path. Returning false from `yield`
/// stops the enumeration.
inline void for_each_simple_lasso(const Arena& arena, Vertex v0,
                                  const std::function<bool(const Lasso&)>& yield) {
  std::vector<Vertex> path{v0};
  std::vector<std::size_t> pos(arena.num_vertices(), kNone);
  pos[v0] = 0;
  bool stop = false;
  std::function<void()> dfs = [&] {
    const Vertex u = path.back();
    for (Vertex s : arena.successors(u)) {
      if (stop) return;
      if (pos[s] != kNone) {
        Lasso l;
        l.prefix.assign(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(pos[s]));
        l.cycle.assign(path.begin() + static_cast<std::ptrdiff_t>(pos[s]), path.end());
        if (!yield(l)) stop = true;
      } else {
        pos[s] = path.size();
        path.push_back(s);
        dfs();
        path.pop_back();
        pos[s] = kNone;
      }
    }
  };
  dfs();
}

inline std::vector<Lasso> enumerate_simple_lassos(const Arena& arena, Vertex v0) {
  std::vector<Lasso> out;
  for_each_simple_lasso(arena, v0, [&](const Lasso& l) {
    out.push_back(l);
    return true;
  });
  return out;
}

/// Strongly connected components of a graph given by successor lists,
/// restricted to `alive` vertices. Components come out in reverse topological
/// order (Tarjan); each is sorted.
inline std::vector<std::vector<std::size_t>> tarjan_sccs(
    const std::vector<std::vector<std::size_t>>& succ, const std::vector<bool>& alive) {
  const std::size_t n = succ.size();
  std::vector<std::size_t> index(n, kNone), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> out;
  std::size_t counter = 0;
  // Iterative to survive large product graphs.
  for (std::size_t root = 0; root < n; ++root) {
    if (!alive[root] || index[root] != kNone) continue;
    std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [u, i] = call.back();
      if (i < succ[u].size()) {
        std::size_t w = succ[u][i++];
        if (!alive[w]) continue;
        if (index[w] == kNone) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[u] = std::min(low[u], index[w]);
        }
        continue;
      }
      if (low[u] == index[u]) {
        std::vector<std::size_t> comp;
        std::size_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != u);
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
      }
      std::size_t done = u;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  return out;
}

/// True when the component contains a cycle (more than one vertex, or a self-loop).
inline bool is_cyclic_component(const std::vector<std::vector<std::size_t>>& succ,
                                const std::vector<std::size_t>& comp) {
  if (comp.size() > 1) return true;
  const auto& s = succ[comp[0]];
  return std::find(s.begin(), s.end(), comp[0]) != s.end();
}

/// Vertices reachable from `from` using only `alive` vertices.
inline std::vector<bool> reachable(const std::vector<std::vector<std::size_t>>& succ,
                                   const std::vector<std::size_t>& from,
                                   const std::vector<bool>& alive) {
  std::vector<bool> seen(succ.size(), false);
  std::vector<std::size_t> work;
  for (auto v : from)
    if (alive[v] && !seen[v]) {
      seen[v] = true;
      work.push_back(v);
    }
  while (!work.empty()) {
    auto u = work.back();
    work.pop_back();
    for (auto w : succ[u])
      if (alive[w] && !seen[w]) {
        seen[w] = true;
        work.push_back(w);
      }
  }
  return seen;
}

/// Cyclic SCCs of the subgraph induced by `filter` that are reachable from v0
/// inside it, sorted by smallest vertex. Trivial components without a
/// self-loop are dropped, since no play can stay in them.
inline std::vector<std::vector<Vertex>> reachable_sccs(const Arena& arena, Vertex v0,
                                                       std::optional<std::vector<bool>> filter = {}) {
  const std::size_t n = arena.num_vertices();
  std::vector<bool> alive = filter.value_or(std::vector<bool>(n, true));
  if (alive.size() != n) throw std::invalid_argument("filter size differs from vertex count");
  if (v0 >= n || !alive[v0]) throw std::invalid_argument("start vertex excluded by filter");
  std::vector<std::vector<std::size_t>> succ(n);
  for (Vertex v = 0; v < n; ++v) succ[v] = arena.successors(v);
  auto reach = reachable(succ, {v0}, alive);
  auto comps = tarjan_sccs(succ, reach);
  std::vector<std::vector<Vertex>> out;
  for (auto& c : comps)
    if (is_cyclic_component(succ, c)) out.push_back(std::move(c));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace gg
