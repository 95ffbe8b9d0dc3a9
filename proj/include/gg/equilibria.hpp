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

// Multi-player games: coalition values, the outcome characterization of Nash
// equilibria, punishment profiles, constraint search, and verification of
// Nash, secure and subgame perfect equilibria for finite-memory profiles.
//
// Internally every game is first brought into "maximizing form" (minimizers
// get negated weights or complemented objectives) and, when some payoff looks
// at the whole play (reachability, safety, Sup, Inf), lifted to an arena that
// records the relevant event so that all payoffs become prefix-independent.

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gg/arena.hpp"
#include "gg/budget.hpp"
#include "gg/detail/boolean.hpp"
#include "gg/detail/game_graph.hpp"
#include "gg/objectives.hpp"
#include "gg/oneplayer.hpp"
#include "gg/payoffs.hpp"
#include "gg/zerosum.hpp"

namespace gg {

/// Arena plus one payoff and one preference per player. Secure preferences
/// rank own payoffs like Maximize; the secure refinement only matters to
/// verify_se.
struct MultiGame {
  Arena arena;
  std::vector<PayoffSpec> payoffs;
  std::vector<Preference> prefs;
};

inline std::vector<std::string> check_game(const MultiGame& g) {
  std::vector<std::string> issues;
  const std::size_t k = g.arena.num_players();
  if (g.payoffs.size() != k) issues.push_back("expected one payoff per player");
  if (g.prefs.size() != k) issues.push_back("expected one preference per player");
  for (std::size_t i = 0; i < g.payoffs.size(); ++i)
    for (const auto& s : check_payoff(g.payoffs[i], g.arena))
      issues.push_back("player " + std::to_string(i + 1) + ": " + s);
  for (std::size_t i = 0; i < g.prefs.size(); ++i)
    if (g.prefs[i].kind == Preference::Kind::Secure && k != 2)
      issues.push_back("secure preference needs exactly two players");
  return issues;
}

inline void require_valid(const MultiGame& g) {
  auto issues = check_game(g);
  if (!issues.empty()) throw std::invalid_argument("invalid game: " + issues.front());
}

inline Preference own_order(const Preference& p) {
  return p.kind == Preference::Kind::Minimize ? p : Preference::maximize();
}

/// Payoff of every player on a play.
inline std::vector<Rational> payoffs(const MultiGame& g, const Lasso& l) {
  std::vector<Rational> out;
  for (const auto& s : g.payoffs) out.push_back(payoff_of_lasso(g.arena, s, l));
  return out;
}

namespace detail {

inline bool needs_lar(const PayoffSpec& s) {
  return s.is_boolean() && (std::holds_alternative<Rabin>(*s.objective) ||
                            std::holds_alternative<Streett>(*s.objective) ||
                            std::holds_alternative<Muller>(*s.objective));
}

}  // namespace detail

/// Values of player i's coalition game G_i (player i against everybody else)
/// under i's own preference, with optimal strategies for both sides.
inline ValueMap coalition_values(const MultiGame& g, Player i,
                                 Budget budget = Budget(default_budget(), "coalition values")) {
  require_valid(g);
  const auto& spec = g.payoffs.at(i);
  const Preference pref = own_order(g.prefs[i]);
  if (!detail::needs_lar(spec)) return quantitative_values(g.arena, spec, i, pref, budget);
  const bool minimize = pref.kind == Preference::Kind::Minimize;
  Objective o = minimize ? complement(*spec.objective, g.arena.num_vertices()) : *spec.objective;
  auto wr = solve_boolean(g.arena, o, i, budget);
  ValueMap m;
  m.protagonist = i;
  for (bool w : wr.w1) m.values.push_back(w != minimize ? Rational(1) : Rational(0));
  m.strategy_p1 = std::move(wr.strategy_p1);
  m.strategy_p2 = std::move(wr.strategy_p2);
  return m;
}

namespace detail {

// ---------------------------------------------------------------------------
// Maximizing form

enum class Flip { None, Negate, Complement };

struct MaxForm {
  MultiGame game;
  std::vector<Flip> flip;

  Rational to_original(std::size_t i, const Rational& x) const {
    switch (flip[i]) {
      case Flip::None: return x;
      case Flip::Negate: return -x;
      case Flip::Complement: return 1 - x;
    }
    return x;
  }
  /// Bounds [lo, hi] in player i's own order become bounds in the usual order.
  std::pair<std::optional<Rational>, std::optional<Rational>> bounds(std::size_t i,
                                                                     const std::optional<Rational>& lo,
                                                                     const std::optional<Rational>& hi) const {
    auto map = [&](const std::optional<Rational>& x) -> std::optional<Rational> {
      if (!x) return x;
      return to_original(i, *x);  // the maps are involutions
    };
    return {map(lo), map(hi)};
  }
};

inline MaxForm max_form(const MultiGame& g) {
  MaxForm out{g, std::vector<Flip>(g.payoffs.size(), Flip::None)};
  ArenaSpec spec = g.arena.spec();
  bool new_profiles = false;
  for (std::size_t i = 0; i < g.payoffs.size(); ++i) {
    out.game.prefs[i] = Preference::maximize();
    if (g.prefs[i].kind != Preference::Kind::Minimize) continue;
    auto& s = out.game.payoffs[i];
    if (s.is_boolean()) {
      s.objective = complement(*s.objective, g.arena.num_vertices());
      out.flip[i] = Flip::Complement;
      continue;
    }
    for (auto& e : spec.edges) e.weights.push_back(-e.weights[s.profile]);
    s.profile = spec.weight_profiles++;
    s.kind = dual_kind(s.kind);
    out.flip[i] = Flip::Negate;
    new_profiles = true;
  }
  if (new_profiles) out.game.arena = Arena(spec);
  return out;
}

// ---------------------------------------------------------------------------
// Lifting whole-play payoffs to prefix-independent ones

/// Arena whose vertices are (v, records): for each player with a reachability,
/// safety, Sup or Inf payoff, whether the target was met so far or the best
/// weight seen so far. Records are updated on entering a vertex.
class Lifted {
 public:
  explicit Lifted(const MultiGame& base) : base_(base), game_(base) {
    for (std::size_t i = 0; i < base.payoffs.size(); ++i)
      if (classify(base.payoffs[i]) == PayoffClass::ConditionOneOnly) tracked_.push_back(i);
    if (tracked_.empty()) return;
    const Arena& a = base.arena;
    for (auto i : tracked_) {
      std::vector<Rational> lv;
      if (!base.payoffs[i].is_boolean()) {
        for (std::size_t e = 0; e < a.num_edges(); ++e) lv.push_back(a.edge_weights(e)[base.payoffs[i].profile]);
        std::sort(lv.begin(), lv.end());
        lv.erase(std::unique(lv.begin(), lv.end()), lv.end());
      }
      levels_.push_back(std::move(lv));
    }
    std::vector<std::size_t> work;
    auto intern = [&](Vertex v, const std::vector<int>& r) {
      auto [it, fresh] = index_.emplace(std::pair(v, r), label_.size());
      if (fresh) {
        label_.push_back(v);
        rec_.push_back(r);
        work.push_back(it->second);
      }
      return it->second;
    };
    for (Vertex v = 0; v < a.num_vertices(); ++v) intern(v, start_record(v));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    while (!work.empty()) {
      auto d = work.back();
      work.pop_back();
      for (Vertex s : a.successors(label_[d])) edges.emplace_back(d, intern(s, step_record(d, s)));
    }
    ArenaSpec spec;
    spec.players = a.num_players();
    const std::size_t n = label_.size();
    for (std::size_t d = 0; d < n; ++d) {
      std::string nm = a.name(label_[d]) + "[";
      for (std::size_t t = 0; t < rec_[d].size(); ++t) nm += (t ? "," : "") + std::to_string(rec_[d][t]);
      spec.names.push_back(nm + "]");
      spec.owner.push_back(a.owner(label_[d]));
    }
    std::vector<std::size_t> extra(tracked_.size(), kNone);
    spec.weight_profiles = a.num_weight_profiles();
    for (std::size_t t = 0; t < tracked_.size(); ++t)
      if (!base.payoffs[tracked_[t]].is_boolean()) extra[t] = spec.weight_profiles++;
    for (auto [d, e] : edges) {
      EdgeSpec es{d, e, {}};
      for (std::size_t p = 0; p < a.num_weight_profiles(); ++p) es.weights.push_back(a.weight(p, label_[d], label_[e]));
      for (std::size_t t = 0; t < tracked_.size(); ++t)
        if (extra[t] != kNone) es.weights.push_back(levels_[t][static_cast<std::size_t>(rec_[e][t])]);
      spec.edges.push_back(std::move(es));
    }
    game_.arena = Arena(spec);
    for (std::size_t i = 0; i < base.payoffs.size(); ++i) {
      const auto& s = base.payoffs[i];
      auto t = std::find(tracked_.begin(), tracked_.end(), i);
      if (t == tracked_.end()) {
        if (s.is_boolean()) game_.payoffs[i].objective = lift_objective(*s.objective);
        continue;
      }
      const auto ti = static_cast<std::size_t>(t - tracked_.begin());
      if (s.is_boolean()) {
        VertexSet flagged(n);
        for (std::size_t d = 0; d < n; ++d) flagged[d] = rec_[d][ti] == 1;
        if (std::holds_alternative<Reachability>(*s.objective)) game_.payoffs[i] = PayoffSpec::boolean(Buchi{flagged});
        else game_.payoffs[i] = PayoffSpec::boolean(CoBuchi{flagged});
      } else {
        auto kind = s.kind == PayoffKind::Sup ? PayoffKind::LimSup : PayoffKind::LimInf;
        game_.payoffs[i] = PayoffSpec::quantitative(kind, extra[ti]);
      }
    }
  }

  bool identity() const { return tracked_.empty(); }
  const MultiGame& game() const { return game_; }
  const MultiGame& base() const { return base_; }
  Vertex label(std::size_t d) const { return identity() ? d : label_[d]; }

  std::size_t start(Vertex v) const { return identity() ? v : index_.at({v, start_record(v)}); }
  std::size_t step(std::size_t d, Vertex v) const { return identity() ? v : index_.at({v, step_record(d, v)}); }

  /// The same play over lifted vertices.
  Lasso lift(const Lasso& l) const {
    if (identity()) return l;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;  // (cycle phase, d) -> position
    std::vector<std::size_t> play;
    std::size_t d = start(l.at(0));
    for (std::size_t pos = 0;; ++pos) {
      if (pos > 0) d = step(d, l.at(pos));
      if (pos >= l.prefix.size()) {
        auto [it, fresh] = seen.emplace(std::pair((pos - l.prefix.size()) % l.cycle.size(), d), pos);
        if (!fresh) {
          Lasso out;
          out.prefix.assign(play.begin(), play.begin() + static_cast<std::ptrdiff_t>(it->second));
          out.cycle.assign(play.begin() + static_cast<std::ptrdiff_t>(it->second), play.end());
          return normalize(out);
        }
      }
      play.push_back(d);
    }
  }

  Lasso project(const Lasso& l) const {
    if (identity()) return l;
    Lasso out;
    for (auto d : l.prefix) out.prefix.push_back(label_[d]);
    for (auto d : l.cycle) out.cycle.push_back(label_[d]);
    return normalize(out);
  }

  /// A strategy over lifted vertices as a strategy over the base arena; the
  /// memory additionally remembers the previous lifted vertex.
  MealyStrategy lower(const MealyStrategy& s) const {
    if (identity()) return s;
    const Arena& a = base_.arena;
    const std::size_t n = a.num_vertices();
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index;  // (prev lifted or kNone, state)
    std::vector<std::pair<std::size_t, std::size_t>> keys;
    std::vector<std::size_t> work;
    auto intern = [&](std::size_t prev, std::size_t m) {
      auto [it, fresh] = index.emplace(std::pair(prev, m), keys.size());
      if (fresh) {
        keys.emplace_back(prev, m);
        work.push_back(it->second);
      }
      return it->second;
    };
    intern(kNone, s.initial);
    std::vector<std::vector<Vertex>> moves;
    std::vector<std::vector<std::size_t>> updates;
    while (!work.empty()) {
      auto k = work.back();
      work.pop_back();
      if (moves.size() < keys.size()) {
        moves.resize(keys.size(), std::vector<Vertex>(n, kNone));
        updates.resize(keys.size(), std::vector<std::size_t>(n, 0));
      }
      auto [prev, m] = keys[k];
      for (Vertex v = 0; v < n; ++v) {
        updates[k][v] = k;
        if (prev != kNone && !a.has_edge(label_[prev], v)) continue;
        std::size_t d = prev == kNone ? start(v) : step(prev, v);
        Vertex mv = s.moves[m][d];
        if (mv != kNone && (s.player == MealyStrategy::kCoalition || a.owner(v) == s.player))
          moves[k][v] = label_[mv];
        std::size_t nk = intern(d, s.updates[m][d]);
        if (moves.size() < keys.size()) {
          moves.resize(keys.size(), std::vector<Vertex>(n, kNone));
          updates.resize(keys.size(), std::vector<std::size_t>(n, 0));
        }
        updates[k][v] = nk;
      }
    }
    MealyStrategy out(s.player, keys.size(), n);
    out.moves = std::move(moves);
    out.updates = std::move(updates);
    out.initial = 0;
    // Give every owned vertex some legal move so simulations never stall.
    for (std::size_t k = 0; k < keys.size(); ++k)
      for (Vertex v = 0; v < n; ++v)
        if (out.moves[k][v] == kNone && (s.player == MealyStrategy::kCoalition || a.owner(v) == s.player))
          out.moves[k][v] = a.successors(v).front();
    return out;
  }

 private:
  std::vector<int> start_record(Vertex v) const {
    std::vector<int> r;
    for (auto i : tracked_) {
      const auto& s = base_.payoffs[i];
      if (!s.is_boolean()) r.push_back(-1);
      else r.push_back(event(*s.objective, v) ? 1 : 0);
    }
    return r;
  }
  std::vector<int> step_record(std::size_t d, Vertex v) const {
    std::vector<int> r = rec_[d];
    const Vertex u = label_[d];
    for (std::size_t t = 0; t < tracked_.size(); ++t) {
      const auto& s = base_.payoffs[tracked_[t]];
      if (s.is_boolean()) {
        r[t] = r[t] || event(*s.objective, v) ? 1 : 0;
        continue;
      }
      const Rational& w = base_.arena.weight(s.profile, u, v);
      int idx = static_cast<int>(std::lower_bound(levels_[t].begin(), levels_[t].end(), w) - levels_[t].begin());
      if (r[t] < 0) r[t] = idx;
      else r[t] = s.kind == PayoffKind::Sup ? std::max(r[t], idx) : std::min(r[t], idx);
    }
    return r;
  }
  static bool event(const Objective& o, Vertex v) {
    if (const auto* x = std::get_if<Reachability>(&o)) return x->target.test(v);
    return std::get<Safety>(o).avoid.test(v);
  }
  Objective lift_objective(const Objective& o) const {
    const std::size_t n = label_.size();
    auto lift = [&](const VertexSet& s) {
      VertexSet out(n);
      for (std::size_t d = 0; d < n; ++d) out[d] = s.test(label_[d]);
      return out;
    };
    return std::visit(
        [&](const auto& x) -> Objective {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Buchi> || std::is_same_v<T, CoBuchi>) {
            return T{lift(x.set)};
          } else if constexpr (std::is_same_v<T, Parity>) {
            Parity p;
            for (std::size_t d = 0; d < n; ++d) p.colors.push_back(x.colors[label_[d]]);
            return p;
          } else if constexpr (std::is_same_v<T, Rabin> || std::is_same_v<T, Streett>) {
            T out;
            for (const auto& [f, g] : x.pairs) out.pairs.emplace_back(lift(f), lift(g));
            return out;
          } else if constexpr (std::is_same_v<T, Muller>) {
            if (n > 16) throw std::invalid_argument("Muller objective too large to lift");
            std::vector<VertexSet> fam;
            for_each_nonempty_subset(n, [&](const VertexSet& s) {
              VertexSet proj(base_.arena.num_vertices());
              for (std::size_t d = 0; d < n; ++d)
                if (s.test(d)) proj.set(label_[d]);
              if (std::binary_search(x.family.begin(), x.family.end(), proj)) fam.push_back(s);
            });
            return make_muller(std::move(fam));
          } else {
            throw std::logic_error("whole-play objectives are tracked, not lifted");
          }
        },
        o);
  }

  MultiGame base_;
  MultiGame game_;
  std::vector<std::size_t> tracked_;
  std::vector<std::vector<Rational>> levels_;
  std::vector<Vertex> label_;
  std::vector<std::vector<int>> rec_;
  std::map<std::pair<Vertex, std::vector<int>>, std::size_t> index_;
};

/// Max form, lifted, with coalition values of every player.
struct Prepared {
  MaxForm mf;
  Lifted lifted;
  std::vector<ValueMap> cv;

  Prepared(const MultiGame& g, Budget& budget) : mf(max_form(g)), lifted(mf.game) {
    for (std::size_t i = 0; i < g.payoffs.size(); ++i) cv.push_back(coalition_values(lifted.game(), i, budget));
  }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Outcome characterization

struct Violation {
  Player player = 0;
  std::size_t position = 0;  // index into the play
  Rational value;            // val_i at that position, in the player's own order
  Rational payoff;           // payoff of the suffix from that position
};

struct OutcomeCheck {
  bool ok = true;
  std::vector<Violation> violations;
  bool lifted = false;  // whole-play payoffs were reformulated on a recording arena
};

namespace detail {

inline OutcomeCheck check_outcome(const Prepared& p, const Lasso& play) {
  const auto& lg = p.lifted.game();
  Lasso l = p.lifted.lift(play);
  OutcomeCheck out;
  out.lifted = !p.lifted.identity();
  const std::size_t len = l.prefix.size() + l.cycle.size();
  std::vector<std::optional<Rational>> whole(lg.payoffs.size());
  for (std::size_t k = 0; k < len; ++k) {
    const std::size_t d = l.at(k);
    const Player i = lg.arena.owner(d);
    const auto& spec = lg.payoffs[i];
    Rational f;
    if (classify(spec) == PayoffClass::PrefixLinear) {
      f = payoff_of_lasso(lg.arena, spec, l.suffix(k));
    } else {
      if (!whole[i]) whole[i] = payoff_of_lasso(lg.arena, spec, l);
      f = *whole[i];
    }
    const Rational& val = p.cv[i].values[d];
    if (val > f)
      out.violations.push_back({i, k, p.mf.to_original(i, val), p.mf.to_original(i, f)});
  }
  out.ok = out.violations.empty();
  return out;
}

}  // namespace detail

/// Whether `play` from its first vertex is the outcome of some Nash
/// equilibrium: at every position k owned by player i, the value val_i there
/// must not exceed what i gets from the suffix starting at k. Discounted
/// payoffs use their exact suffix values; reachability, safety, Sup and Inf are
/// checked on the recording arena.
inline OutcomeCheck ne_outcome_check(const MultiGame& g, const Lasso& play,
                                     Budget budget = Budget(default_budget(), "outcome check")) {
  require_valid(g);
  if (!is_valid_lasso(g.arena, play)) throw std::invalid_argument("play is not a lasso of the arena");
  detail::Prepared p(g, budget);
  return detail::check_outcome(p, play);
}

// ---------------------------------------------------------------------------
// Punishment profiles

struct NeWitness {
  Lasso outcome;
  std::vector<Rational> payoffs;
  StrategyProfile profile;
  bool lifted = false;
};

namespace detail {

/// Profile that follows `play` and, once a player leaves it, lets everybody
/// else play that player's coalition strategy. Memory of player j: positions
/// along the play, possibly one extra state telling apart the two ways into
/// the cycle, and the punishing strategies' memories for every i != j.
inline StrategyProfile punishment_profile(const Arena& a, const Lasso& play, const std::vector<ValueMap>& cv) {
  const std::size_t n = a.num_vertices(), k = a.num_players();
  const std::size_t h = play.prefix.size(), L = h + play.cycle.size();
  auto rho = [&](std::size_t p) { return play.at(p); };
  auto next = [&](std::size_t p) { return p + 1 < L ? p + 1 : h; };
  StrategyProfile out;
  for (Player j = 0; j < k; ++j) {
    const Player a_in = h > 0 ? a.owner(rho(h - 1)) : kNone;  // into the cycle from the prefix
    const Player b_in = a.owner(rho(L - 1));                    // around the cycle
    const bool need_j = h > 0 && a_in != b_in && j != a_in && j != b_in;
    std::vector<std::size_t> offset(k, kNone);
    std::size_t total = L + (need_j ? 1 : 0);
    for (Player i = 0; i < k; ++i)
      if (i != j) {
        offset[i] = total;
        total += cv[i].strategy_p2.states;
      }
    const std::size_t junction = need_j ? L : kNone;
    // Who left the play when state `st` (expecting rho(pos)) sees another vertex.
    auto blame = [&](std::size_t st, std::size_t pos) -> Player {
      if (st == junction) return b_in;
      if (pos == 0) return h == 0 ? b_in : a.owner(rho(0));
      if (pos != h) return a.owner(rho(pos - 1));
      if (a_in == b_in || need_j) return a_in;
      return j == a_in ? b_in : a_in;
    };
    MealyStrategy s(j, total, n);
    auto own_fallback = [&](Vertex v) { return a.successors(v).front(); };
    for (std::size_t st = 0; st < L + (need_j ? 1 : 0); ++st) {
      const std::size_t pos = st == junction ? h : st;
      for (Vertex v = 0; v < n; ++v) {
        const bool owned = a.owner(v) == j;
        if (v == rho(pos)) {
          if (owned) s.moves[st][v] = rho(next(pos));
          s.updates[st][v] = (pos == L - 1 && need_j) ? junction : next(pos);
          continue;
        }
        const Player i = blame(st, pos);
        if (i == j) {
          if (owned) s.moves[st][v] = own_fallback(v);
          s.updates[st][v] = st;
          continue;
        }
        const auto& pun = cv[i].strategy_p2;
        if (owned) {
          auto mv = pun.move(pun.initial, v);
          s.moves[st][v] = mv ? *mv : own_fallback(v);
        }
        s.updates[st][v] = offset[i] + pun.update(pun.initial, v);
      }
    }
    for (Player i = 0; i < k; ++i) {
      if (i == j) continue;
      const auto& pun = cv[i].strategy_p2;
      for (std::size_t m = 0; m < pun.states; ++m)
        for (Vertex v = 0; v < n; ++v) {
          if (a.owner(v) == j) {
            auto mv = pun.move(m, v);
            s.moves[offset[i] + m][v] = mv ? *mv : own_fallback(v);
          }
          s.updates[offset[i] + m][v] = offset[i] + pun.update(m, v);
        }
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline NeWitness make_witness(const MultiGame& g, const Prepared& p, const Lasso& lifted_play) {
  const auto& lg = p.lifted.game();
  auto prof = punishment_profile(lg.arena, lifted_play, p.cv);
  NeWitness w;
  w.lifted = !p.lifted.identity();
  for (auto& s : prof) w.profile.push_back(p.lifted.lower(s));
  w.outcome = p.lifted.project(lifted_play);
  w.payoffs = payoffs(g, w.outcome);
  return w;
}

}  // namespace detail

/// A finite-memory Nash equilibrium from v0: everybody follows the optimal
/// strategy of their own coalition game, and the first player to leave the
/// resulting play is punished by the others with the coalition's optimal
/// strategy against them.
inline NeWitness construct_ne(const MultiGame& g, Vertex v0,
                              Budget budget = Budget(default_budget(), "equilibrium construction")) {
  require_valid(g);
  detail::Prepared p(g, budget);
  const auto& lg = p.lifted.game();
  StrategyProfile own;
  for (const auto& c : p.cv) own.push_back(c.strategy_p1);
  Lasso play = outcome(lg.arena, own, p.lifted.start(v0));
  return detail::make_witness(g, p, play);
}

// ---------------------------------------------------------------------------
// Constraint problem

/// Per-player bounds in each player's own order; absent entries are
/// unconstrained.
struct Bounds {
  std::vector<std::optional<Rational>> lower, upper;
};

namespace detail {

struct Range {
  std::optional<Rational> lo, hi;
  bool contains(const Rational& x) const { return (!lo || *lo <= x) && (!hi || x <= *hi); }
};

/// Longest-path tight edges: the edges of `h` inside `in` lying on a cycle
/// whose mean is `mean` (the extreme mean in the direction of `sign`).
inline GameGraph tight_graph(const GameGraph& h, const Mask& in, const Rational& mean, int sign) {
  const std::size_t n = h.size();
  std::vector<std::vector<std::optional<Rational>>> dist(n, std::vector<std::optional<Rational>>(n));
  for (std::size_t u = 0; u < n; ++u) {
    if (!in[u]) continue;
    dist[u][u] = Rational(0);
    for (std::size_t k = 0; k < h.succ[u].size(); ++k) {
      Rational w = sign * h.weight[u][k] - sign * mean;
      auto v = h.succ[u][k];
      if (u != v && (!dist[u][v] || w > *dist[u][v])) dist[u][v] = w;
    }
  }
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (dist[u][m] && dist[m][v] && (!dist[u][v] || *dist[u][m] + *dist[m][v] > *dist[u][v]))
          dist[u][v] = *dist[u][m] + *dist[m][v];
  GameGraph t = h;
  for (std::size_t u = 0; u < n; ++u) {
    t.succ[u].clear();
    t.weight[u].clear();
    for (std::size_t k = 0; k < h.succ[u].size(); ++k) {
      auto v = h.succ[u][k];
      Rational w = sign * h.weight[u][k] - sign * mean;
      if (dist[v][u] && w + *dist[v][u] == 0) {
        t.succ[u].push_back(v);
        t.weight[u].push_back(h.weight[u][k]);
      }
    }
  }
  t.finalize();
  return t;
}

/// Closed walk inside S through every required edge and every vertex of S.
inline std::optional<std::vector<std::size_t>> route(const GameGraph& h, const std::vector<std::size_t>& S,
                                                     const Mask& in,
                                                     const std::vector<std::pair<std::size_t, std::size_t>>& keys) {
  std::vector<std::size_t> walk{S[0]};
  auto go = [&](std::size_t to) {
    Mask t(h.size(), false);
    t[to] = true;
    auto path = shortest_path(h, walk.back(), t, in);
    if (path.empty()) return false;
    walk.insert(walk.end(), path.begin() + 1, path.end());
    return true;
  };
  for (auto [u, v] : keys) {
    if (!go(u)) return std::nullopt;
    walk.push_back(v);
  }
  for (auto s : S)
    if (!go(s)) return std::nullopt;
  if (!go(S[0])) return std::nullopt;
  if (walk.size() > 1) walk.pop_back();
  return walk;
}

inline bool strongly_connected_on(const GameGraph& h, const std::vector<std::size_t>& S, const Mask& in) {
  auto comps = tarjan_sccs(h.succ, in);
  return comps.size() == 1 && comps[0] == S && is_cyclic_component(h.succ, comps[0]);
}

/// A closed walk whose vertex set is exactly S (in the max-form, lifted game
/// `g`, all payoffs prefix-independent) meeting every player's range.
inline std::optional<std::vector<std::size_t>> walk_for_set(const MultiGame& g, const std::vector<std::size_t>& S,
                                                            const std::vector<Range>& want) {
  const Arena& a = g.arena;
  const std::size_t n = a.num_vertices();
  Mask in(n, false);
  VertexSet inf(n);
  for (auto v : S) {
    in[v] = true;
    inf.set(v);
  }
  std::vector<std::size_t> mp;
  for (std::size_t i = 0; i < g.payoffs.size(); ++i) {
    const auto& s = g.payoffs[i];
    if (s.is_boolean() && !want[i].contains(wins_inf(*s.objective, inf) ? 1 : 0)) return std::nullopt;
    if (s.kind == PayoffKind::MeanPayoffSup || s.kind == PayoffKind::MeanPayoffInf) mp.push_back(i);
  }
  GameGraph h;
  h.succ.resize(n);
  h.weight.resize(n);
  h.side.assign(n, 0);
  h.label.resize(n);
  for (Vertex u = 0; u < n; ++u) {
    h.label[u] = u;
    if (!in[u]) continue;
    for (Vertex v : a.successors(u)) {
      if (!in[v]) continue;
      bool keep = true;
      for (std::size_t i = 0; i < g.payoffs.size(); ++i) {
        const auto& s = g.payoffs[i];
        if (s.kind == PayoffKind::LimSup && want[i].hi) keep = keep && a.weight(s.profile, u, v) <= *want[i].hi;
        if (s.kind == PayoffKind::LimInf && want[i].lo) keep = keep && a.weight(s.profile, u, v) >= *want[i].lo;
      }
      if (!keep) continue;
      h.succ[u].push_back(v);
      h.weight[u].push_back(Rational(0));
    }
  }
  h.finalize();
  auto keys_in = [&](const GameGraph& graph) -> std::optional<std::vector<std::pair<std::size_t, std::size_t>>> {
    if (!strongly_connected_on(graph, S, in)) return std::nullopt;
    std::vector<std::pair<std::size_t, std::size_t>> keys;
    for (std::size_t i = 0; i < g.payoffs.size(); ++i) {
      const auto& s = g.payoffs[i];
      const bool sup = s.kind == PayoffKind::LimSup, inf_kind = s.kind == PayoffKind::LimInf;
      if (!(sup && want[i].lo) && !(inf_kind && want[i].hi)) continue;
      bool found = false;
      for (auto u : S) {
        for (auto v : graph.succ[u]) {
          const Rational& w = a.weight(s.profile, u, v);
          if (sup ? w >= *want[i].lo : w <= *want[i].hi) {
            keys.emplace_back(u, v);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) return std::nullopt;
    }
    return keys;
  };
  auto keys = keys_in(h);
  if (!keys) return std::nullopt;
  auto walk = route(h, S, in, *keys);
  if (!walk) return std::nullopt;
  auto mean = [&](const std::vector<std::size_t>& w, std::size_t profile) {
    Rational s = 0;
    for (std::size_t k = 0; k < w.size(); ++k) s += a.weight(profile, w[k], w[(k + 1) % w.size()]);
    return s / Rational(static_cast<long long>(w.size()));
  };
  auto all_ok = [&](const std::vector<std::size_t>& w) {
    for (auto i : mp)
      if (!want[i].contains(mean(w, g.payoffs[i].profile))) return false;
    return true;
  };
  if (all_ok(*walk)) return walk;
  // Move one mean payoff into range by mixing with an extreme cycle. With
  // several mean-payoff players this is a heuristic.
  for (auto i : mp) {
    GameGraph hw = h;
    for (Vertex u = 0; u < n; ++u)
      for (std::size_t k = 0; k < hw.succ[u].size(); ++k) hw.weight[u][k] = a.weight(g.payoffs[i].profile, u, hw.succ[u][k]);
    auto top = max_mean_cycle_in_component(hw, S);
    auto bottom = max_mean_cycle_in_component(negate_weights(hw), S);
    bottom.value = -bottom.value;
    const Rational mu0 = mean(*walk, g.payoffs[i].profile);
    std::optional<std::vector<std::size_t>> cand;
    if (want[i].lo && mu0 < *want[i].lo) {
      const Rational& t = *want[i].lo;
      if (t < top.value) cand = mix_cycles(hw, top.cycle, *walk, in, t);
      else if (t == top.value) {
        auto tg = tight_graph(hw, in, t, 1);
        if (auto tk = keys_in(tg)) cand = route(tg, S, in, *tk);
      }
    } else if (want[i].hi && mu0 > *want[i].hi) {
      const Rational& t = *want[i].hi;
      if (t > bottom.value) cand = mix_cycles(hw, *walk, bottom.cycle, in, t);
      else if (t == bottom.value) {
        auto tg = tight_graph(hw, in, t, -1);
        if (auto tk = keys_in(tg)) cand = route(tg, S, in, *tk);
      }
    }
    if (cand && all_ok(*cand)) return cand;
  }
  return std::nullopt;
}

/// Strongly connected vertex sets, by ascending size then lexicographically.
template <typename F>
bool for_each_candidate_set(const std::vector<std::size_t>& pool, Budget& budget, F&& f) {
  const std::size_t m = pool.size();
  std::vector<std::size_t> pick;
  for (std::size_t size = 1; size <= m; ++size) {
    pick.resize(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    while (true) {
      budget.spend();
      std::vector<std::size_t> S;
      for (auto i : pick) S.push_back(pool[i]);
      if (f(S)) return true;
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return false;
}

/// Searches a play satisfying the constraint characterization: every player's
/// visited values stay below a guessed ceiling that its payoff reaches.
inline std::optional<Lasso> generic_constraint_play(const Prepared& p, std::size_t start,
                                                    const std::vector<Range>& bounds, Budget& budget) {
  const auto& g = p.lifted.game();
  const Arena& a = g.arena;
  const std::size_t n = a.num_vertices(), k = a.num_players();
  std::vector<std::vector<Rational>> ceilings(k);
  for (Vertex v = 0; v < n; ++v) ceilings[a.owner(v)].push_back(p.cv[a.owner(v)].values[v]);
  for (auto& c : ceilings) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
  }
  auto full = from_arena(a, 0);
  std::vector<std::size_t> pool;
  auto reach0 = reachable(full.succ, {start}, Mask(n, true));
  for (Vertex v = 0; v < n; ++v)
    if (reach0[v]) pool.push_back(v);
  std::optional<Lasso> found;
  for_each_candidate_set(pool, budget, [&](const std::vector<std::size_t>& S) {
    // choice[i] == ceilings[i].size() means player i's vertices are avoided.
    std::vector<std::size_t> choice(k, 0);
    while (true) {
      budget.spend();
      Mask allowed(n);
      for (Vertex v = 0; v < n; ++v) {
        const Player o = a.owner(v);
        allowed[v] = choice[o] < ceilings[o].size() && p.cv[o].values[v] <= ceilings[o][choice[o]];
      }
      bool fits = allowed[start];
      for (auto v : S) fits = fits && allowed[v];
      if (fits) {
        std::vector<Range> want = bounds;
        for (Player i = 0; i < k; ++i)
          if (choice[i] < ceilings[i].size()) {
            const Rational& c = ceilings[i][choice[i]];
            if (!want[i].lo || *want[i].lo < c) want[i].lo = c;
          }
        Mask target(n, false);
        target[S[0]] = true;
        auto path = shortest_path(full, start, target, allowed);
        if (!path.empty()) {
          if (auto walk = walk_for_set(g, S, want)) {
            Lasso l;
            l.prefix.assign(path.begin(), path.end() - 1);
            l.cycle = *walk;
            found = normalize(l);
            return true;
          }
        }
      }
      std::size_t i = 0;
      while (i < k && choice[i] == ceilings[i].size()) choice[i++] = 0;
      if (i == k) break;
      ++choice[i];
    }
    return false;
  });
  return found;
}

/// The polynomial procedure for games where every player has a Muller
/// objective, on the max-form game (values are 0 or 1).
inline std::optional<Lasso> muller_constraint_play(const Prepared& p, std::size_t start,
                                                   const std::vector<Range>& bounds, Budget& budget) {
  const auto& g = p.lifted.game();
  const Arena& a = g.arena;
  const std::size_t n = a.num_vertices(), k = a.num_players();
  std::vector<int> mu(k), nu(k);
  for (Player i = 0; i < k; ++i) {
    const auto& r = bounds[i];
    if (r.lo && *r.lo > 1) return std::nullopt;
    if (r.hi && *r.hi < 0) return std::nullopt;
    if (r.lo && r.hi && *r.hi < *r.lo) return std::nullopt;
    mu[i] = r.lo && *r.lo > 0 ? 1 : 0;
    nu[i] = r.hi && *r.hi < 1 ? 0 : 1;
    if (mu[i] > nu[i]) return std::nullopt;
  }
  auto family = [&](Player i) -> const std::vector<VertexSet>& {
    return std::get<Muller>(*g.payoffs[i].objective).family;
  };
  auto in_family = [&](Player i, const VertexSet& U) {
    const auto& f = family(i);
    return std::binary_search(f.begin(), f.end(), U);
  };
  auto val_zero_on = [&](Player j, const VertexSet& U) {
    for (auto v : members(U))
      if (a.owner(v) == j && p.cv[j].values[v] != 0) return false;
    return true;
  };
  auto full = from_arena(a, 0);
  // (i)
  for (Player i = 0; i < k; ++i) {
    if (nu[i] != 1) continue;
    for (const auto& U : family(i)) {
      budget.spend();
      bool ok = true;
      for (Player j = 0; j < k && ok; ++j) {
        const bool member = in_family(j, U);
        if (mu[j] == 1) ok = member;
        else if (nu[j] == 0) ok = !member && val_zero_on(j, U);
        else if (!member) ok = val_zero_on(j, U);
      }
      if (!ok) continue;
      Mask allowed(n);
      for (Vertex v = 0; v < n; ++v) {
        const Player j = a.owner(v);
        allowed[v] = in_family(j, U) || p.cv[j].values[v] == 0;
      }
      std::vector<std::size_t> S = members(U);
      Mask in(n, false);
      bool inside = allowed[start];
      for (auto v : S) {
        in[v] = true;
        inside = inside && allowed[v];
      }
      if (!inside || !strongly_connected_on(full, S, in)) continue;
      Mask target(n, false);
      target[S[0]] = true;
      auto path = shortest_path(full, start, target, allowed);
      if (path.empty()) continue;
      Lasso l;
      l.prefix.assign(path.begin(), path.end() - 1);
      l.cycle = covering_walk(full, S, in);
      return normalize(l);
    }
  }
  // (ii) every payoff 0: the coalition of all players, restricted to value-0
  // vertices, must be able to avoid the union of the families.
  for (Player j = 0; j < k; ++j)
    if (mu[j] == 1) return std::nullopt;
  Mask keep(n);
  for (Vertex v = 0; v < n; ++v) keep[v] = p.cv[a.owner(v)].values[v] == 0;
  for (bool changed = true; changed;) {
    changed = false;
    for (Vertex v = 0; v < n; ++v) {
      if (!keep[v]) continue;
      bool any = false;
      for (auto s : a.successors(v)) any = any || keep[s];
      if (!any) {
        keep[v] = false;
        changed = true;
      }
    }
  }
  if (!keep[start]) return std::nullopt;
  std::vector<std::size_t> id(n, kNone);
  GameGraph gp;
  for (Vertex v = 0; v < n; ++v)
    if (keep[v]) {
      id[v] = gp.succ.size();
      gp.succ.emplace_back();
      gp.side.push_back(1);
      gp.label.push_back(v);
    }
  for (Vertex v = 0; v < n; ++v)
    if (keep[v])
      for (auto s : a.successors(v))
        if (keep[s]) gp.succ[id[v]].push_back(id[s]);
  gp.finalize();
  std::vector<VertexSet> all;
  for (Player i = 0; i < k; ++i) all.insert(all.end(), family(i).begin(), family(i).end());
  auto sol = solve_boolean_graph(gp, make_muller(std::move(all)), budget);
  if (sol.win[id[start]]) return std::nullopt;
  auto raw = play_graph(gp, sol.strategy[0], sol.strategy[1], id[start]);
  return project(gp, raw);
}

inline bool all_muller(const MultiGame& g) {
  for (const auto& s : g.payoffs)
    if (!s.is_boolean() || !std::holds_alternative<Muller>(*s.objective)) return false;
  return true;
}

}  // namespace detail

/// Searches a Nash equilibrium from v0 whose payoffs lie within the bounds
/// (in each player's own order). Games where every player has a Muller
/// objective use the dedicated polynomial procedure; other payoffs use a
/// search over value ceilings and candidate inf-sets. Discounted payoffs are
/// rejected.
inline std::optional<NeWitness> ne_constraint_decide(const MultiGame& g, Vertex v0, const Bounds& bounds,
                                                     Budget budget = Budget(default_budget(), "constraint search")) {
  require_valid(g);
  const std::size_t k = g.arena.num_players();
  if ((!bounds.lower.empty() && bounds.lower.size() != k) || (!bounds.upper.empty() && bounds.upper.size() != k))
    throw std::invalid_argument("bounds need one entry per player");
  for (const auto& s : g.payoffs)
    if (s.kind == PayoffKind::Discounted)
      throw std::invalid_argument("constraint search does not support discounted payoffs");
  detail::Prepared p(g, budget);
  std::vector<detail::Range> want(k);
  for (Player i = 0; i < k; ++i) {
    std::optional<Rational> lo = bounds.lower.empty() ? std::nullopt : bounds.lower[i];
    std::optional<Rational> hi = bounds.upper.empty() ? std::nullopt : bounds.upper[i];
    auto [a, b] = p.mf.bounds(i, lo, hi);
    if (p.mf.flip[i] != detail::Flip::None) std::swap(a, b);
    want[i] = {a, b};
  }
  const std::size_t start = p.lifted.start(v0);
  std::optional<Lasso> play = detail::all_muller(p.lifted.game())
                                  ? detail::muller_constraint_play(p, start, want, budget)
                                  : detail::generic_constraint_play(p, start, want, budget);
  if (!play) return std::nullopt;
  auto check = detail::check_outcome(p, p.lifted.project(*play));
  if (!check.ok) throw std::logic_error("constraint search produced a play violating the characterization");
  return detail::make_witness(g, p, *play);
}

// ---------------------------------------------------------------------------
// Verification

struct BestResponse {
  Rational value;
  Lasso play;  // a play reaching that value against the fixed strategies
};

/// Best payoff player i can secure from v0 when every other player follows
/// its strategy in `profile` (the entry for i is ignored).
inline BestResponse best_response(const MultiGame& g, Player i, const StrategyProfile& profile, Vertex v0,
                                  Budget budget = Budget(default_budget(), "best response product")) {
  require_valid(g);
  const Arena& a = g.arena;
  const std::size_t k = a.num_players();
  if (profile.size() != k) throw std::invalid_argument("profile needs one strategy per player");
  std::vector<detail::FixedStrategy> fixed;
  std::vector<std::size_t> init;
  for (Player j = 0; j < k; ++j) {
    if (j == i) continue;
    detail::Mask ctl(a.num_vertices());
    for (Vertex v = 0; v < a.num_vertices(); ++v) ctl[v] = a.owner(v) == j;
    fixed.push_back({&profile[j], ctl});
    init.push_back(profile[j].initial);
  }
  std::vector<int> sides(k, 0);
  const auto& spec = g.payoffs[i];
  std::optional<std::size_t> wprof;
  if (!spec.is_boolean()) wprof = spec.profile;
  auto prod = detail::build_product(a, fixed, sides, {v0}, wprof, budget);
  const std::size_t root = prod.at(v0, init);
  const Preference pref = own_order(g.prefs[i]);
  BestResponse br;
  if (detail::needs_lar(spec)) {
    const bool minimize = pref.kind == Preference::Kind::Minimize;
    Objective o = minimize ? complement(*spec.objective, a.num_vertices()) : *spec.objective;
    auto sol = detail::solve_boolean_graph(prod.graph, o, budget);
    br.value = sol.win[root] != minimize ? 1 : 0;
    br.play = detail::project(prod.graph, detail::play_graph(prod.graph, sol.strategy[0], sol.strategy[1], root));
  } else {
    auto vals = detail::solve_spec_graph(prod.graph, spec, pref, budget);
    br.value = vals.value[root];
    br.play = detail::project(prod.graph, detail::play_choice(prod.graph, vals.choice, root));
  }
  return br;
}

struct NeVerdict {
  bool ok = true;
  std::optional<Player> player;    // a player with a profitable deviation
  std::optional<Lasso> deviation;  // the play that deviation produces
  std::vector<Rational> payoffs;   // payoffs of the profile's outcome
};

/// Nash equilibrium check: no player can improve its payoff alone.
inline NeVerdict verify_ne(const MultiGame& g, Vertex v0, const StrategyProfile& profile,
                           Budget budget = Budget(default_budget(), "equilibrium verification")) {
  require_valid(g);
  NeVerdict out;
  Lasso play = outcome(g.arena, profile, v0);
  out.payoffs = payoffs(g, play);
  for (Player i = 0; i < g.arena.num_players(); ++i) {
    auto br = best_response(g, i, profile, v0, budget);
    if (compare(own_order(g.prefs[i]), br.value, out.payoffs[i]) == Order::Greater) {
      out.ok = false;
      out.player = i;
      out.deviation = br.play;
      return out;
    }
  }
  return out;
}

/// Secure equilibrium check for two players: no deviation keeps the
/// deviator's payoff while lowering the other's, or raises its own. Deviations
/// range over positional strategies in the product with the other player's
/// memory. Minimizing players compare negated payoffs.
inline NeVerdict verify_se(const MultiGame& g, Vertex v0, const StrategyProfile& profile,
                           Budget budget = Budget(default_budget(), "secure verification")) {
  require_valid(g);
  const Arena& a = g.arena;
  if (a.num_players() != 2) throw std::invalid_argument("secure equilibria are defined for two players");
  NeVerdict out;
  Lasso play = outcome(a, profile, v0);
  out.payoffs = payoffs(g, play);
  auto oriented = [&](std::vector<Rational> p) {
    for (std::size_t i = 0; i < 2; ++i)
      if (g.prefs[i].kind == Preference::Kind::Minimize) p[i] = -p[i];
    return p;
  };
  const auto base = oriented(out.payoffs);
  for (Player i = 0; i < 2; ++i) {
    const Player j = 1 - i;
    detail::Mask ctl(a.num_vertices());
    for (Vertex v = 0; v < a.num_vertices(); ++v) ctl[v] = a.owner(v) == j;
    std::vector<int> sides(2, 1);
    sides[i] = 0;
    auto prod = detail::build_product(a, {{&profile[j], ctl}}, sides, {v0}, std::nullopt, budget);
    const std::size_t root = prod.at(v0, {profile[j].initial});
    const auto& pg = prod.graph;
    std::vector<std::size_t> free;
    for (std::size_t u = 0; u < pg.size(); ++u)
      if (pg.side[u] == 0 && pg.succ[u].size() > 1) free.push_back(u);
    detail::Choice choice(pg.size());
    for (std::size_t u = 0; u < pg.size(); ++u) choice[u] = pg.succ[u][0];
    std::vector<std::size_t> pick(free.size(), 0);
    while (true) {
      budget.spend();
      for (std::size_t f = 0; f < free.size(); ++f) choice[free[f]] = pg.succ[free[f]][pick[f]];
      Lasso dev = detail::project(pg, detail::play_choice(pg, choice, root));
      auto q = oriented(payoffs(g, dev));
      if (compare(Preference::secure(i), base, q) == Order::Less) {
        out.ok = false;
        out.player = i;
        out.deviation = dev;
        return out;
      }
      std::size_t f = 0;
      while (f < free.size() && pick[f] + 1 == pg.succ[free[f]].size()) pick[f++] = 0;
      if (f == free.size()) break;
      ++pick[f];
    }
  }
  return out;
}

struct SpeVerdict {
  bool ok = true;
  std::optional<Vertex> vertex;              // subgame start
  std::vector<std::size_t> memory;           // memory states there, one per player
  std::optional<Player> player;              // deviating player in that subgame
  std::optional<Lasso> deviation;
};

/// Subgame perfection for prefix-independent payoffs: the profile, restarted
/// from every configuration (vertex, memories) reachable under any history,
/// must be a Nash equilibrium there.
inline SpeVerdict verify_spe(const MultiGame& g, Vertex v0, const StrategyProfile& profile,
                             Budget budget = Budget(default_budget(), "subgame verification")) {
  require_valid(g);
  for (const auto& s : g.payoffs)
    if (classify(s) != PayoffClass::PrefixIndependent)
      throw std::invalid_argument("subgame perfection is checked for prefix-independent payoffs only");
  const Arena& a = g.arena;
  using Config = std::pair<Vertex, std::vector<std::size_t>>;
  std::vector<std::size_t> init;
  for (const auto& s : profile) init.push_back(s.initial);
  std::map<Config, bool> seen;
  std::vector<Config> order{{v0, init}};
  seen[order[0]] = true;
  for (std::size_t q = 0; q < order.size(); ++q) {
    budget.spend();
    auto [v, mem] = order[q];
    std::vector<std::size_t> next(mem.size());
    for (std::size_t j = 0; j < mem.size(); ++j) next[j] = profile[j].update(mem[j], v);
    for (Vertex s : a.successors(v)) {
      Config c{s, next};
      if (seen.emplace(c, true).second) order.push_back(c);
    }
  }
  SpeVerdict out;
  for (const auto& [v, mem] : order) {
    StrategyProfile restarted = profile;
    for (std::size_t j = 0; j < mem.size(); ++j) restarted[j].initial = mem[j];
    auto ne = verify_ne(g, v, restarted, budget);
    if (!ne.ok) {
      out.ok = false;
      out.vertex = v;
      out.memory = mem;
      out.player = ne.player;
      out.deviation = ne.deviation;
      return out;
    }
  }
  return out;
}

}  // namespace gg
