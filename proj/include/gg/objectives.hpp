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
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "gg/arena.hpp"

namespace gg {

using VertexSet = boost::dynamic_bitset<>;

inline VertexSet make_set(std::size_t n, std::initializer_list<Vertex> vs) {
  VertexSet s(n);
  for (auto v : vs) s.set(v);
  return s;
}
inline VertexSet make_set(std::size_t n, const std::vector<Vertex>& vs) {
  VertexSet s(n);
  for (auto v : vs) s.set(v);
  return s;
}
inline std::vector<Vertex> members(const VertexSet& s) {
  std::vector<Vertex> out;
  for (auto i = s.find_first(); i != VertexSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

struct Reachability { VertexSet target; };
struct Safety { VertexSet avoid; };
struct Buchi { VertexSet set; };
struct CoBuchi { VertexSet set; };
/// Max-parity: the play wins when the largest color seen infinitely often is even.
struct Parity { std::vector<unsigned> colors; };
/// Pairs (F_k, G_k). Rabin: some k with inf n F_k empty and inf n G_k nonempty.
struct Rabin { std::vector<std::pair<VertexSet, VertexSet>> pairs; };
/// Streett: every k has inf n F_k nonempty or inf n G_k empty.
struct Streett { std::vector<std::pair<VertexSet, VertexSet>> pairs; };
/// Explicit family of winning inf-sets, kept sorted and duplicate free.
struct Muller { std::vector<VertexSet> family; };

using Objective = std::variant<Reachability, Safety, Buchi, CoBuchi, Parity, Rabin, Streett, Muller>;

inline const char* objective_name(const Objective& o) {
  static const char* names[] = {"reachability", "safety", "buchi", "cobuchi",
                                "parity",       "rabin",  "streett", "muller"};
  return names[o.index()];
}

inline bool is_prefix_independent(const Objective& o) {
  return !std::holds_alternative<Reachability>(o) && !std::holds_alternative<Safety>(o);
}

inline Muller make_muller(std::vector<VertexSet> family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return Muller{std::move(family)};
}

/// Structural problems with an objective over an arena of n vertices.
inline std::vector<std::string> check_objective(const Objective& o, std::size_t n) {
  std::vector<std::string> issues;
  auto check_set = [&](const VertexSet& s, const char* what) {
    if (s.size() != n) issues.push_back(std::string(what) + " is sized for a different arena");
  };
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Reachability>) check_set(x.target, "reachability set");
        else if constexpr (std::is_same_v<T, Safety>) check_set(x.avoid, "safety set");
        else if constexpr (std::is_same_v<T, Buchi> || std::is_same_v<T, CoBuchi>) check_set(x.set, "set");
        else if constexpr (std::is_same_v<T, Parity>) {
          if (x.colors.size() != n) issues.push_back("coloring does not cover every vertex");
        } else if constexpr (std::is_same_v<T, Rabin> || std::is_same_v<T, Streett>) {
          if (x.pairs.empty()) issues.push_back("pair list is empty");
          for (const auto& [f, g] : x.pairs) {
            check_set(f, "pair set F");
            check_set(g, "pair set G");
          }
        } else {
          for (const auto& s : x.family) {
            check_set(s, "Muller family member");
            if (s.none()) issues.push_back("Muller family contains the empty set");
          }
        }
      },
      o);
  return issues;
}

/// Whether a play whose inf-set is `inf` satisfies a prefix-independent objective.
inline bool wins_inf(const Objective& o, const VertexSet& inf) {
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Reachability> || std::is_same_v<T, Safety>) {
          throw std::invalid_argument("reachability and safety depend on the whole play");
        } else if constexpr (std::is_same_v<T, Buchi>) {
          return x.set.intersects(inf);
        } else if constexpr (std::is_same_v<T, CoBuchi>) {
          return !x.set.intersects(inf);
        } else if constexpr (std::is_same_v<T, Parity>) {
          unsigned best = 0;
          bool any = false;
          for (auto v : members(inf)) {
            best = any ? std::max(best, x.colors[v]) : x.colors[v];
            any = true;
          }
          return any && best % 2 == 0;
        } else if constexpr (std::is_same_v<T, Rabin>) {
          for (const auto& [f, g] : x.pairs)
            if (!f.intersects(inf) && g.intersects(inf)) return true;
          return false;
        } else if constexpr (std::is_same_v<T, Streett>) {
          for (const auto& [f, g] : x.pairs)
            if (!f.intersects(inf) && g.intersects(inf)) return false;
          return true;
        } else {
          return std::binary_search(x.family.begin(), x.family.end(), inf);
        }
      },
      o);
}

inline std::size_t objective_size(const Objective& o) {
  return std::visit(
      [](const auto& x) -> std::size_t {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Reachability>) return x.target.size();
        else if constexpr (std::is_same_v<T, Safety>) return x.avoid.size();
        else if constexpr (std::is_same_v<T, Buchi> || std::is_same_v<T, CoBuchi>) return x.set.size();
        else if constexpr (std::is_same_v<T, Parity>) return x.colors.size();
        else if constexpr (std::is_same_v<T, Rabin> || std::is_same_v<T, Streett>)
          return x.pairs.empty() ? 0 : x.pairs[0].first.size();
        else return x.family.empty() ? std::size_t{0} : x.family[0].size();
      },
      o);
}

inline bool satisfies(const Objective& o, const Lasso& l) {
  const std::size_t n = objective_size(o);
  auto check = [&](Vertex v) {
    if (v >= n && n > 0) throw std::invalid_argument("lasso vertex outside the objective's arena");
  };
  for (auto v : l.prefix) check(v);
  for (auto v : l.cycle) check(v);
  if (const auto* r = std::get_if<Reachability>(&o)) {
    for (auto v : l.prefix) if (r->target.test(v)) return true;
    for (auto v : l.cycle) if (r->target.test(v)) return true;
    return false;
  }
  if (const auto* s = std::get_if<Safety>(&o)) {
    for (auto v : l.prefix) if (s->avoid.test(v)) return false;
    for (auto v : l.cycle) if (s->avoid.test(v)) return false;
    return true;
  }
  if (const auto* m = std::get_if<Muller>(&o); m && m->family.empty()) return false;
  VertexSet inf(n);
  for (auto v : l.cycle) inf.set(v);
  return wins_inf(o, inf);
}

/// Calls f on every nonempty subset of an n-vertex set.
template <typename F>
void for_each_nonempty_subset(std::size_t n, F&& f) {
  if (n > 24) throw std::invalid_argument("explicit subset enumeration limited to 24 vertices");
  for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) f(VertexSet(n, mask));
}

/// Equivalent Muller family. Rejects reachability and safety.
inline Muller as_muller(const Objective& o, std::size_t n) {
  if (const auto* m = std::get_if<Muller>(&o)) return *m;
  if (!is_prefix_independent(o))
    throw std::invalid_argument(std::string(objective_name(o)) + " has no Muller form");
  std::vector<VertexSet> family;
  for_each_nonempty_subset(n, [&](const VertexSet& s) {
    if (wins_inf(o, s)) family.push_back(s);
  });
  return make_muller(std::move(family));
}

inline Objective complement(const Objective& o, std::size_t n) {
  return std::visit(
      [&](const auto& x) -> Objective {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Reachability>) return Safety{x.target};
        else if constexpr (std::is_same_v<T, Safety>) return Reachability{x.avoid};
        else if constexpr (std::is_same_v<T, Buchi>) return CoBuchi{x.set};
        else if constexpr (std::is_same_v<T, CoBuchi>) return Buchi{x.set};
        else if constexpr (std::is_same_v<T, Parity>) {
          Parity p = x;
          for (auto& c : p.colors) ++c;
          return p;
        } else if constexpr (std::is_same_v<T, Rabin>) return Streett{x.pairs};
        else if constexpr (std::is_same_v<T, Streett>) return Rabin{x.pairs};
        else {
          std::vector<VertexSet> family;
          for_each_nonempty_subset(n, [&](const VertexSet& s) {
            if (!std::binary_search(x.family.begin(), x.family.end(), s)) family.push_back(s);
          });
          return make_muller(std::move(family));
        }
      },
      o);
}

inline Objective complement(const Objective& o) { return complement(o, objective_size(o)); }

/// Büchi, co-Büchi and parity objectives as colorings.
inline Parity as_parity(const Objective& o) {
  if (const auto* p = std::get_if<Parity>(&o)) return *p;
  if (const auto* b = std::get_if<Buchi>(&o)) {
    Parity p{std::vector<unsigned>(b->set.size(), 1)};
    for (auto v : members(b->set)) p.colors[v] = 2;
    return p;
  }
  if (const auto* c = std::get_if<CoBuchi>(&o)) {
    Parity p{std::vector<unsigned>(c->set.size(), 0)};
    for (auto v : members(c->set)) p.colors[v] = 1;
    return p;
  }
  throw std::invalid_argument(std::string(objective_name(o)) + " is not a parity condition");
}

/// Parity as Rabin: one pair per even color e, with F = colors above e and G = color e.
inline Rabin parity_as_rabin(const Parity& p) {
  const std::size_t n = p.colors.size();
  unsigned top = 0;
  for (auto c : p.colors) top = std::max(top, c);
  Rabin r;
  for (unsigned e = 0; e <= top; e += 2) {
    VertexSet f(n), g(n);
    for (Vertex v = 0; v < n; ++v) {
      if (p.colors[v] > e) f.set(v);
      if (p.colors[v] == e) g.set(v);
    }
    r.pairs.emplace_back(f, g);
  }
  return r;
}

/// Parity as Streett: one pair per odd color o, with F = colors above o and G = color o.
inline Streett parity_as_streett(const Parity& p) {
  const std::size_t n = p.colors.size();
  unsigned top = 0;
  for (auto c : p.colors) top = std::max(top, c);
  Streett s;
  for (unsigned o = 1; o <= top; o += 2) {
    VertexSet f(n), g(n);
    for (Vertex v = 0; v < n; ++v) {
      if (p.colors[v] > o) f.set(v);
      if (p.colors[v] == o) g.set(v);
    }
    s.pairs.emplace_back(f, g);
  }
  if (s.pairs.empty()) s.pairs.emplace_back(VertexSet(n), VertexSet(n));  // vacuous pair
  return s;
}

}  // namespace gg
