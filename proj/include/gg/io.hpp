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

// JSON game files, strategies and witnesses, and Graphviz export.
//
// On the wire vertices are referred to by id, players and weight profiles are
// 1-based, and every rational is a "p/q" string. Unknown keys are errors.

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gg/arena.hpp"
#include "gg/equilibria.hpp"
#include "gg/objectives.hpp"
#include "gg/payoffs.hpp"
#include "gg/rational.hpp"

namespace gg {

using Json = nlohmann::ordered_json;

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Defaults for CLI options, stored under a name in the game file.
struct Query {
  std::optional<std::string> from;
  std::optional<std::size_t> player;  // 0-based
  std::optional<Rational> threshold;
  std::vector<std::optional<Rational>> lower, upper;
};

struct GameFile {
  Arena arena;
  std::vector<PayoffSpec> payoffs;  // empty or one per player
  std::vector<Preference> prefs;    // empty or one per player
  std::optional<StrategyProfile> profile;
  std::map<std::string, Query> queries;

  MultiGame game() const {
    if (payoffs.size() != arena.num_players()) throw InputError("game file needs one payoff per player");
    std::vector<Preference> p = prefs;
    if (p.empty()) p.assign(arena.num_players(), Preference::maximize());
    return {arena, payoffs, p};
  }
};

namespace detail {

inline void only_keys(const Json& j, std::initializer_list<const char*> keys, const std::string& where) {
  if (!j.is_object()) throw InputError(where + ": expected an object");
  for (const auto& [k, _] : j.items()) {
    bool known = false;
    for (const char* x : keys) known = known || k == x;
    if (!known) throw InputError(where + ": unknown field '" + k + "'");
  }
}

inline const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
  return j.at(key);
}

inline Rational read_rational(const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long long>());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a rational string such as \"3/2\"");
}

inline std::size_t read_index(const Json& j, std::size_t limit, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1 || static_cast<std::size_t>(j.get<long long>()) > limit)
    throw InputError(where + ": expected an integer between 1 and " + std::to_string(limit));
  return static_cast<std::size_t>(j.get<long long>()) - 1;
}

inline Vertex read_vertex(const Arena& a, const Json& j, const std::string& where) {
  if (!j.is_string()) throw InputError(where + ": expected a vertex id");
  auto v = a.find(j.get<std::string>());
  if (!v) throw InputError(where + ": unknown vertex '" + j.get<std::string>() + "'");
  return *v;
}

inline VertexSet read_set(const Arena& a, const Json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array of vertex ids");
  VertexSet s(a.num_vertices());
  for (const auto& x : j) s.set(read_vertex(a, x, where));
  return s;
}

inline Json write_set(const Arena& a, const VertexSet& s) {
  Json out = Json::array();
  for (auto v : members(s)) out.push_back(a.name(v));
  return out;
}

inline Json write_vertices(const Arena& a, const std::vector<Vertex>& vs) {
  Json out = Json::array();
  for (auto v : vs) out.push_back(a.name(v));
  return out;
}

inline std::optional<Objective> read_objective(const Arena& a, const Json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) return std::nullopt;
  const std::string t = j["type"].get<std::string>();
  auto pairs = [&](const Json& list) {
    if (!list.is_array()) throw InputError(where + ": pairs must be an array");
    std::vector<std::pair<VertexSet, VertexSet>> out;
    for (const auto& p : list) {
      only_keys(p, {"e", "f"}, where + " pair");
      out.emplace_back(read_set(a, field(p, "e", where), where), read_set(a, field(p, "f", where), where));
    }
    return out;
  };
  if (t == "reachability") {
    only_keys(j, {"type", "target"}, where);
    return Reachability{read_set(a, field(j, "target", where), where)};
  }
  if (t == "safety") {
    only_keys(j, {"type", "avoid"}, where);
    return Safety{read_set(a, field(j, "avoid", where), where)};
  }
  if (t == "buchi" || t == "cobuchi") {
    only_keys(j, {"type", "set"}, where);
    auto s = read_set(a, field(j, "set", where), where);
    if (t == "buchi") return Buchi{s};
    return CoBuchi{s};
  }
  if (t == "parity") {
    only_keys(j, {"type", "colors"}, where);
    const auto& c = field(j, "colors", where);
    if (!c.is_object()) throw InputError(where + ": colors must map every vertex id to a color");
    Parity p;
    p.colors.assign(a.num_vertices(), 0);
    std::vector<bool> seen(a.num_vertices(), false);
    for (const auto& [k, x] : c.items()) {
      auto v = a.find(k);
      if (!v) throw InputError(where + ": unknown vertex '" + k + "'");
      if (!x.is_number_integer() || x.get<long long>() < 0) throw InputError(where + ": colors are naturals");
      p.colors[*v] = static_cast<unsigned>(x.get<long long>());
      seen[*v] = true;
    }
    for (Vertex v = 0; v < a.num_vertices(); ++v)
      if (!seen[v]) throw InputError(where + ": no color for vertex '" + a.name(v) + "'");
    return p;
  }
  if (t == "rabin" || t == "streett") {
    only_keys(j, {"type", "pairs"}, where);
    auto ps = pairs(field(j, "pairs", where));
    if (t == "rabin") return Rabin{ps};
    return Streett{ps};
  }
  if (t == "muller") {
    only_keys(j, {"type", "family"}, where);
    const auto& f = field(j, "family", where);
    if (!f.is_array()) throw InputError(where + ": family must be an array of vertex sets");
    std::vector<VertexSet> fam;
    for (const auto& s : f) fam.push_back(read_set(a, s, where));
    return make_muller(std::move(fam));
  }
  return std::nullopt;
}

inline Json write_objective(const Arena& a, const Objective& o) {
  Json j;
  j["type"] = objective_name(o);
  auto pairs = [&](const auto& ps) {
    Json out = Json::array();
    for (const auto& [e, f] : ps) {
      Json p;
      p["e"] = write_set(a, e);
      p["f"] = write_set(a, f);
      out.push_back(p);
    }
    return out;
  };
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Reachability>) j["target"] = write_set(a, x.target);
        else if constexpr (std::is_same_v<T, Safety>) j["avoid"] = write_set(a, x.avoid);
        else if constexpr (std::is_same_v<T, Buchi> || std::is_same_v<T, CoBuchi>) j["set"] = write_set(a, x.set);
        else if constexpr (std::is_same_v<T, Parity>) {
          Json c = Json::object();
          for (Vertex v = 0; v < a.num_vertices(); ++v) c[a.name(v)] = x.colors[v];
          j["colors"] = c;
        } else if constexpr (std::is_same_v<T, Rabin> || std::is_same_v<T, Streett>) {
          j["pairs"] = pairs(x.pairs);
        } else {
          Json f = Json::array();
          for (const auto& s : x.family) f.push_back(write_set(a, s));
          j["family"] = f;
        }
      },
      o);
  return j;
}

inline std::optional<PayoffKind> kind_named(const std::string& t) {
  for (auto k : {PayoffKind::Sup, PayoffKind::Inf, PayoffKind::LimSup, PayoffKind::LimInf, PayoffKind::MeanPayoffSup,
                 PayoffKind::MeanPayoffInf, PayoffKind::Discounted})
    if (t == payoff_name(k)) return k;
  return std::nullopt;
}

}  // namespace detail

/// Objective descriptor such as {"type":"buchi","set":["v2","v3"]}.
inline Objective objective_from_json(const Arena& a, const Json& j, const std::string& where = "objective") {
  auto o = detail::read_objective(a, j, where);
  if (!o) throw InputError(where + ": unknown objective type");
  return *o;
}

inline Json objective_to_json(const Arena& a, const Objective& o) { return detail::write_objective(a, o); }

/// Payoff descriptor: a quantitative kind with a 1-based weight profile, such
/// as {"type":"discounted","lambda":"1/2","weights":1}, or an objective.
inline PayoffSpec payoff_from_json(const Arena& a, const Json& j, const std::string& where = "payoff") {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw InputError(where + ": expected an object with a 'type'");
  const std::string t = j["type"].get<std::string>();
  if (auto k = detail::kind_named(t)) {
    PayoffSpec s;
    s.kind = *k;
    if (*k == PayoffKind::Discounted) {
      detail::only_keys(j, {"type", "weights", "lambda"}, where);
      s.lambda = detail::read_rational(detail::field(j, "lambda", where), where + ".lambda");
    } else {
      detail::only_keys(j, {"type", "weights"}, where);
    }
    s.profile = detail::read_index(detail::field(j, "weights", where), a.num_weight_profiles(), where + ".weights");
    auto issues = check_payoff(s, a);
    if (!issues.empty()) throw InputError(where + ": " + issues.front());
    return s;
  }
  auto o = detail::read_objective(a, j, where);
  if (!o) throw InputError(where + ": unknown payoff type '" + t + "'");
  auto issues = check_objective(*o, a.num_vertices());
  if (!issues.empty()) throw InputError(where + ": " + issues.front());
  return PayoffSpec::boolean(std::move(*o));
}

inline Json payoff_to_json(const Arena& a, const PayoffSpec& s) {
  if (s.is_boolean()) return detail::write_objective(a, *s.objective);
  Json j;
  j["type"] = payoff_name(s.kind);
  if (s.kind == PayoffKind::Discounted) j["lambda"] = to_wire(s.lambda);
  j["weights"] = s.profile + 1;
  return j;
}

inline Preference preference_from_json(const Json& j, Player i, const std::string& where) {
  if (j == "max") return Preference::maximize();
  if (j == "min") return Preference::minimize();
  if (j == "secure") return Preference::secure(i);
  throw InputError(where + ": preference must be \"max\", \"min\" or \"secure\"");
}

inline Json preference_to_json(const Preference& p) {
  switch (p.kind) {
    case Preference::Kind::Maximize: return "max";
    case Preference::Kind::Minimize: return "min";
    case Preference::Kind::Secure: return "secure";
  }
  return "max";
}

inline Lasso lasso_from_json(const Arena& a, const Json& j, const std::string& where = "lasso") {
  detail::only_keys(j, {"prefix", "cycle"}, where);
  Lasso l;
  for (const auto& x : detail::field(j, "prefix", where)) l.prefix.push_back(detail::read_vertex(a, x, where));
  for (const auto& x : detail::field(j, "cycle", where)) l.cycle.push_back(detail::read_vertex(a, x, where));
  if (!is_valid_lasso(a, l)) throw InputError(where + ": not a lasso of the arena");
  return l;
}

inline Json lasso_to_json(const Arena& a, const Lasso& l) {
  Json j;
  j["prefix"] = detail::write_vertices(a, l.prefix);
  j["cycle"] = detail::write_vertices(a, l.cycle);
  return j;
}

/// Mealy transducer: "moves" and "updates" list, per memory state, a map from
/// vertex id to successor id and to next state. Unlisted updates go to state
/// 0; unlisted moves are undefined.
inline MealyStrategy strategy_from_json(const Arena& a, const Json& j, const std::string& where = "strategy") {
  detail::only_keys(j, {"player", "states", "initial", "moves", "updates"}, where);
  const auto& pj = detail::field(j, "player", where);
  Player p = pj.is_null() ? MealyStrategy::kCoalition : detail::read_index(pj, a.num_players(), where + ".player");
  const auto& sj = detail::field(j, "states", where);
  if (!sj.is_number_integer() || sj.get<long long>() < 1) throw InputError(where + ": states must be positive");
  const auto states = static_cast<std::size_t>(sj.get<long long>());
  MealyStrategy s(p, states, a.num_vertices());
  auto state_index = [&](const Json& x, const std::string& w) {
    if (!x.is_number_integer() || x.get<long long>() < 0 || static_cast<std::size_t>(x.get<long long>()) >= states)
      throw InputError(w + ": memory state out of range");
    return static_cast<std::size_t>(x.get<long long>());
  };
  s.initial = j.contains("initial") ? state_index(j["initial"], where + ".initial") : 0;
  auto per_state = [&](const char* key, auto&& apply) {
    if (!j.contains(key)) return;
    const auto& list = j[key];
    if (!list.is_array() || list.size() != states)
      throw InputError(where + "." + key + ": expected one object per memory state");
    for (std::size_t m = 0; m < states; ++m) {
      if (!list[m].is_object()) throw InputError(where + "." + key + ": expected an object");
      for (const auto& [k, x] : list[m].items()) {
        auto v = a.find(k);
        if (!v) throw InputError(where + "." + key + ": unknown vertex '" + k + "'");
        apply(m, *v, x);
      }
    }
  };
  per_state("moves", [&](std::size_t m, Vertex v, const Json& x) {
    s.moves[m][v] = detail::read_vertex(a, x, where + ".moves");
  });
  per_state("updates", [&](std::size_t m, Vertex v, const Json& x) {
    s.updates[m][v] = state_index(x, where + ".updates");
  });
  auto issues = check_strategy(a, s);
  if (!issues.empty()) throw InputError(where + ": " + issues.front());
  return s;
}

inline Json strategy_to_json(const Arena& a, const MealyStrategy& s) {
  Json j;
  j["player"] = s.player == MealyStrategy::kCoalition ? Json(nullptr) : Json(s.player + 1);
  j["states"] = s.states;
  j["initial"] = s.initial;
  Json moves = Json::array(), updates = Json::array();
  for (std::size_t m = 0; m < s.states; ++m) {
    Json mv = Json::object(), up = Json::object();
    for (Vertex v = 0; v < a.num_vertices(); ++v) {
      if (s.moves[m][v] != kNone) mv[a.name(v)] = a.name(s.moves[m][v]);
      if (s.updates[m][v] != 0) up[a.name(v)] = s.updates[m][v];
    }
    moves.push_back(mv);
    updates.push_back(up);
  }
  j["moves"] = moves;
  j["updates"] = updates;
  return j;
}

inline StrategyProfile profile_from_json(const Arena& a, const Json& j, const std::string& where = "profile") {
  if (!j.is_array() || j.size() != a.num_players())
    throw InputError(where + ": expected one strategy per player");
  StrategyProfile p;
  for (std::size_t i = 0; i < j.size(); ++i) {
    p.push_back(strategy_from_json(a, j[i], where + "[" + std::to_string(i + 1) + "]"));
    if (p.back().player != i) throw InputError(where + ": strategy " + std::to_string(i + 1) + " belongs to another player");
  }
  return p;
}

inline Json profile_to_json(const Arena& a, const StrategyProfile& p) {
  Json j = Json::array();
  for (const auto& s : p) j.push_back(strategy_to_json(a, s));
  return j;
}

inline Json witness_to_json(const Arena& a, const NeWitness& w) {
  Json j;
  j["outcome"] = lasso_to_json(a, w.outcome);
  Json pay = Json::array();
  for (const auto& x : w.payoffs) pay.push_back(to_wire(x));
  j["payoffs"] = pay;
  j["profile"] = profile_to_json(a, w.profile);
  j["transformed"] = w.lifted;
  return j;
}

/// Reads a witness, or a bare profile array (outcome and payoffs are then
/// recomputed from `v0` by the caller).
inline NeWitness witness_from_json(const MultiGame& g, const Json& j, Vertex v0, const std::string& where = "witness") {
  NeWitness w;
  if (j.is_array()) {
    w.profile = profile_from_json(g.arena, j, where);
  } else {
    detail::only_keys(j, {"outcome", "payoffs", "profile", "transformed"}, where);
    w.profile = profile_from_json(g.arena, detail::field(j, "profile", where), where + ".profile");
    if (j.contains("transformed")) w.lifted = j["transformed"].get<bool>();
  }
  w.outcome = outcome(g.arena, w.profile, v0);
  w.payoffs = payoffs(g, w.outcome);
  if (j.is_object() && j.contains("outcome") && lasso_from_json(g.arena, j["outcome"]) != w.outcome)
    throw InputError(where + ": stored outcome differs from the profile's play");
  return w;
}

namespace detail {

inline Query query_from_json(const Arena& a, const Json& j, const std::string& where) {
  only_keys(j, {"from", "player", "threshold", "lower", "upper"}, where);
  Query q;
  if (j.contains("from")) q.from = a.name(read_vertex(a, j["from"], where + ".from"));
  if (j.contains("player")) q.player = read_index(j["player"], a.num_players(), where + ".player");
  if (j.contains("threshold")) q.threshold = read_rational(j["threshold"], where + ".threshold");
  for (const char* key : {"lower", "upper"}) {
    if (!j.contains(key)) continue;
    const auto& list = j[key];
    if (!list.is_array() || list.size() != a.num_players())
      throw InputError(where + "." + key + ": expected one entry per player");
    auto& out = std::string(key) == "lower" ? q.lower : q.upper;
    for (const auto& x : list)
      out.push_back(x.is_null() ? std::nullopt : std::optional(read_rational(x, where + "." + key)));
  }
  return q;
}

inline Json query_to_json(const Query& q) {
  Json j = Json::object();
  if (q.from) j["from"] = *q.from;
  if (q.player) j["player"] = *q.player + 1;
  if (q.threshold) j["threshold"] = to_wire(*q.threshold);
  auto bounds = [](const std::vector<std::optional<Rational>>& b) {
    Json out = Json::array();
    for (const auto& x : b) out.push_back(x ? Json(to_wire(*x)) : Json(nullptr));
    return out;
  };
  if (!q.lower.empty()) j["lower"] = bounds(q.lower);
  if (!q.upper.empty()) j["upper"] = bounds(q.upper);
  return j;
}

}  // namespace detail

inline GameFile game_from_json(const Json& j) {
  detail::only_keys(j, {"players", "vertices", "edges", "payoffs", "preferences", "profile", "queries"}, "game");
  ArenaSpec spec;
  const auto& pj = detail::field(j, "players", "game");
  if (!pj.is_number_integer() || pj.get<long long>() < 1) throw InputError("game.players: expected a positive integer");
  spec.players = static_cast<std::size_t>(pj.get<long long>());
  std::map<std::string, Vertex> ids;
  const auto& vj = detail::field(j, "vertices", "game");
  if (!vj.is_array()) throw InputError("game.vertices: expected an array");
  for (const auto& v : vj) {
    detail::only_keys(v, {"id", "owner"}, "vertex");
    const auto& id = detail::field(v, "id", "vertex");
    if (!id.is_string()) throw InputError("vertex: id must be a string");
    const std::string name = id.get<std::string>();
    if (!ids.emplace(name, spec.names.size()).second) throw InputError("vertex: duplicate id '" + name + "'");
    spec.names.push_back(name);
    spec.owner.push_back(detail::read_index(detail::field(v, "owner", "vertex " + name), spec.players,
                                            "vertex " + name + ".owner"));
  }
  const auto& ej = detail::field(j, "edges", "game");
  if (!ej.is_array()) throw InputError("game.edges: expected an array");
  bool first = true;
  for (const auto& e : ej) {
    detail::only_keys(e, {"from", "to", "weights"}, "edge");
    auto endpoint = [&](const char* key) {
      const auto& x = detail::field(e, key, "edge");
      if (!x.is_string() || !ids.count(x.get<std::string>()))
        throw InputError(std::string("edge.") + key + ": unknown vertex " + x.dump());
      return ids.at(x.get<std::string>());
    };
    EdgeSpec es{endpoint("from"), endpoint("to"), {}};
    const std::string where = "edge " + spec.names[es.from] + "->" + spec.names[es.to];
    if (e.contains("weights")) {
      if (!e["weights"].is_array()) throw InputError(where + ": weights must be an array");
      for (const auto& w : e["weights"]) es.weights.push_back(detail::read_rational(w, where));
    }
    if (first) spec.weight_profiles = es.weights.size();
    first = false;
    spec.edges.push_back(std::move(es));
  }
  auto arena = [&] {
    try {
      return Arena(spec);
    } catch (const InvalidArena& e) {
      throw InputError(e.what());
    }
  };
  GameFile f{arena(), {}, {}, std::nullopt, {}};
  const Arena& a = f.arena;
  if (j.contains("payoffs")) {
    const auto& list = j["payoffs"];
    if (!list.is_array() || list.size() != a.num_players())
      throw InputError("game.payoffs: expected one payoff per player");
    for (std::size_t i = 0; i < list.size(); ++i)
      f.payoffs.push_back(payoff_from_json(a, list[i], "payoff of player " + std::to_string(i + 1)));
  }
  if (j.contains("preferences")) {
    const auto& list = j["preferences"];
    if (!list.is_array() || list.size() != a.num_players())
      throw InputError("game.preferences: expected one preference per player");
    for (std::size_t i = 0; i < list.size(); ++i)
      f.prefs.push_back(preference_from_json(list[i], i, "preference of player " + std::to_string(i + 1)));
    if (!f.payoffs.empty()) {
      auto issues = check_game(MultiGame{a, f.payoffs, f.prefs});
      if (!issues.empty()) throw InputError("game: " + issues.front());
    }
  }
  if (j.contains("profile")) f.profile = profile_from_json(a, j["profile"]);
  if (j.contains("queries")) {
    if (!j["queries"].is_object()) throw InputError("game.queries: expected an object");
    for (const auto& [name, q] : j["queries"].items())
      f.queries.emplace(name, detail::query_from_json(a, q, "query " + name));
  }
  return f;
}

inline Json game_to_json(const GameFile& f) {
  const Arena& a = f.arena;
  Json j;
  j["players"] = a.num_players();
  Json vs = Json::array();
  for (Vertex v = 0; v < a.num_vertices(); ++v) {
    Json x;
    x["id"] = a.name(v);
    x["owner"] = a.owner(v) + 1;
    vs.push_back(x);
  }
  j["vertices"] = vs;
  Json es = Json::array();
  for (std::size_t e = 0; e < a.num_edges(); ++e) {
    Json x;
    x["from"] = a.name(a.edge_from(e));
    x["to"] = a.name(a.edge_to(e));
    Json ws = Json::array();
    for (const auto& w : a.edge_weights(e)) ws.push_back(to_wire(w));
    x["weights"] = ws;
    es.push_back(x);
  }
  j["edges"] = es;
  if (!f.payoffs.empty()) {
    Json ps = Json::array();
    for (const auto& p : f.payoffs) ps.push_back(payoff_to_json(a, p));
    j["payoffs"] = ps;
  }
  if (!f.prefs.empty()) {
    Json ps = Json::array();
    for (const auto& p : f.prefs) ps.push_back(preference_to_json(p));
    j["preferences"] = ps;
  }
  if (f.profile) j["profile"] = profile_to_json(a, *f.profile);
  if (!f.queries.empty()) {
    Json qs = Json::object();
    for (const auto& [name, q] : f.queries) qs[name] = detail::query_to_json(q);
    j["queries"] = qs;
  }
  return j;
}

inline Json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(where + ": " + e.what());
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str(), path);
}

inline GameFile load_game(const std::string& path) { return game_from_json(read_json_file(path)); }

// ---------------------------------------------------------------------------
// Graphviz

struct DotOverlay {
  const StrategyProfile* profile = nullptr;     // chosen edges drawn bold
  const std::vector<Rational>* values = nullptr;  // printed under vertex names
  const Lasso* play = nullptr;                   // on-path edges drawn bold
};

/// Deterministic DOT: player 1 vertices are circles, player 2 boxes, further
/// players diamonds; edges carry their weight tuples.
inline std::string to_dot(const Arena& a, const DotOverlay& overlay = {}) {
  std::vector<std::vector<bool>> bold(a.num_vertices(), std::vector<bool>(a.num_vertices(), false));
  if (overlay.profile)
    for (const auto& s : *overlay.profile)
      for (std::size_t m = 0; m < s.states; ++m)
        for (Vertex v = 0; v < a.num_vertices(); ++v) {
          const bool mine = s.player == MealyStrategy::kCoalition || a.owner(v) == s.player;
          if (mine && s.moves[m][v] != kNone) bold[v][s.moves[m][v]] = true;
        }
  if (overlay.play)
    for (auto [u, v] : lasso_edges(*overlay.play)) bold[u][v] = true;
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  static const char* shapes[] = {"circle", "box", "diamond", "hexagon", "octagon"};
  std::ostringstream os;
  os << "digraph game {\n  rankdir=LR;\n";
  for (Vertex v = 0; v < a.num_vertices(); ++v) {
    std::string label = quote(a.name(v));
    if (overlay.values) label.insert(label.size() - 1, "\\n" + to_text((*overlay.values)[v]));
    os << "  " << quote(a.name(v)) << " [shape=" << shapes[std::min<std::size_t>(a.owner(v), 4)]
       << ", label=" << label << "];\n";
  }
  for (std::size_t e = 0; e < a.num_edges(); ++e) {
    const Vertex u = a.edge_from(e), v = a.edge_to(e);
    os << "  " << quote(a.name(u)) << " -> " << quote(a.name(v));
    std::vector<std::string> attrs;
    const auto& ws = a.edge_weights(e);
    if (!ws.empty()) {
      std::string w = "(";
      for (std::size_t p = 0; p < ws.size(); ++p) w += (p ? "," : "") + to_text(ws[p]);
      attrs.push_back("label=" + quote(w + ")"));
    }
    if (bold[u][v]) attrs.push_back("style=bold, penwidth=3");
    if (!attrs.empty()) {
      os << " [";
      for (std::size_t k = 0; k < attrs.size(); ++k) os << (k ? ", " : "") << attrs[k];
      os << "]";
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace gg
