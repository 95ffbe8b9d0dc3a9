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

// gg: command-line front end. Exit status 0 means yes (wins, meets the
// threshold, found, verified), 1 means no, 2 means bad input or an exhausted
// search budget.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gg.hpp"

namespace {

using gg::InputError;
using gg::Json;
using gg::Rational;

constexpr int kYes = 0, kNo = 1, kError = 2;

struct Common {
  std::string file;
  std::string query;
  std::string from;
  std::size_t player = 0;  // 1-based, 0 = unset
};

const gg::Query* find_query(const gg::GameFile& f, const std::string& name) {
  if (name.empty()) return nullptr;
  auto it = f.queries.find(name);
  if (it == f.queries.end()) throw InputError("no query named '" + name + "'");
  return &it->second;
}

std::optional<gg::Vertex> start_vertex(const gg::GameFile& f, const Common& c, const gg::Query* q) {
  std::string name = c.from;
  if (name.empty() && q && q->from) name = *q->from;
  if (name.empty()) return std::nullopt;
  auto v = f.arena.find(name);
  if (!v) throw InputError("unknown vertex '" + name + "'");
  return v;
}

gg::Vertex require_start(const gg::GameFile& f, const Common& c, const gg::Query* q) {
  auto v = start_vertex(f, c, q);
  if (!v) throw InputError("--from is required");
  return *v;
}

gg::Player player_of(const gg::GameFile& f, const Common& c, const gg::Query* q) {
  if (c.player > 0) {
    if (c.player > f.arena.num_players()) throw InputError("--player out of range");
    return c.player - 1;
  }
  if (q && q->player) return *q->player;
  return 0;
}

Rational rational_arg(const std::string& s, const char* what) {
  try {
    return gg::parse_rational(s);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

// "limsup:w1", "discounted:w2:1/2", "mp-inf:w1".
gg::PayoffSpec payoff_shorthand(const gg::Arena& a, const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  Json j;
  if (parts.size() < 2 || parts[1].size() < 2 || parts[1][0] != 'w')
    throw InputError("--payoff expects kind:wN[:lambda], got '" + text + "'");
  j["type"] = parts[0];
  try {
    j["weights"] = std::stoll(parts[1].substr(1));
  } catch (const std::exception&) {
    throw InputError("--payoff: bad weight index in '" + text + "'");
  }
  if (parts.size() == 3) j["lambda"] = parts[2];
  if (parts.size() > 3) throw InputError("--payoff: too many fields in '" + text + "'");
  return gg::payoff_from_json(a, j, "--payoff");
}

Json json_arg(const std::string& text) {
  if (!text.empty() && text[0] == '{') return gg::parse_json_text(text, "argument");
  return gg::read_json_file(text);
}

// Spec chosen on the command line, or the file's payoff for the player.
gg::PayoffSpec pick_spec(const gg::GameFile& f, gg::Player i, const std::string& payoff, const std::string& objective) {
  if (!payoff.empty() && !objective.empty()) throw InputError("give either --payoff or --objective");
  if (!payoff.empty()) return payoff_shorthand(f.arena, payoff);
  if (!objective.empty()) return gg::payoff_from_json(f.arena, json_arg(objective), "--objective");
  if (f.payoffs.size() == f.arena.num_players()) return f.payoffs[i];
  throw InputError("no payoff given and the file has none for player " + std::to_string(i + 1));
}

gg::Preference pick_pref(const gg::GameFile& f, gg::Player i, bool minimize) {
  if (minimize) return gg::Preference::minimize();
  if (f.prefs.size() == f.arena.num_players()) return gg::own_order(f.prefs[i]);
  return gg::Preference::maximize();
}

// "3,2", "_,2" (underscore leaves a player unconstrained).
std::vector<std::optional<Rational>> bounds_arg(const std::string& text, std::size_t k, const char* what) {
  std::vector<std::optional<Rational>> out;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ',');) {
    if (p == "_") out.emplace_back();
    else out.emplace_back(rational_arg(p, what));
  }
  if (out.size() != k) throw InputError(std::string(what) + ": expected " + std::to_string(k) + " comma-separated entries");
  return out;
}

std::string vertex_list(const gg::Arena& a, const std::vector<bool>& in) {
  std::string s = "{";
  bool first = true;
  for (gg::Vertex v = 0; v < in.size(); ++v)
    if (in[v]) {
      s += (first ? "" : ", ") + a.name(v);
      first = false;
    }
  return s + "}";
}

void print_strategy(const gg::Arena& a, const char* title, const gg::MealyStrategy& s) {
  std::cout << title << ":";
  if (s.positional()) {
    for (gg::Vertex v = 0; v < a.num_vertices(); ++v)
      if (s.moves[0][v] != gg::kNone) std::cout << " " << a.name(v) << "->" << a.name(s.moves[0][v]);
    std::cout << "\n";
    return;
  }
  std::cout << " " << s.states << " memory states\n" << gg::strategy_to_json(a, s).dump() << "\n";
}

// First edge where `dev` leaves `play`.
std::string deviation_edge(const gg::Arena& a, const gg::Lasso& play, const gg::Lasso& dev) {
  const std::size_t n = play.prefix.size() + play.cycle.size() + dev.prefix.size() + dev.cycle.size();
  for (std::size_t k = 1; k <= n; ++k)
    if (play.at(k) != dev.at(k)) return a.name(dev.at(k - 1)) + "→" + a.name(dev.at(k));
  return gg::to_string(a, dev);
}

int cmd_solve(const Common& c, const std::string& payoff, const std::string& objective,
              const std::string& threshold, bool minimize) {
  auto f = gg::load_game(c.file);
  const auto* q = find_query(f, c.query);
  const gg::Player i = player_of(f, c, q);
  auto spec = pick_spec(f, i, payoff, objective);
  auto from = start_vertex(f, c, q);
  const auto& a = f.arena;
  if (spec.is_boolean()) {
    gg::Objective o = *spec.objective;
    if (pick_pref(f, i, minimize).kind == gg::Preference::Kind::Minimize) o = gg::complement(o, a.num_vertices());
    auto wr = gg::solve_boolean(a, o, i);
    std::cout << "W1 = " << vertex_list(a, wr.w1) << "\nW2 = " << vertex_list(a, wr.w2) << "\n";
    print_strategy(a, "sigma1", wr.strategy_p1);
    print_strategy(a, "sigma2", wr.strategy_p2);
    if (!from) return kYes;
    const bool wins = wr.w1[*from];
    std::cout << "player " << i + 1 << (wins ? " wins" : " does not win") << " from " << a.name(*from) << "\n";
    return wins ? kYes : kNo;
  }
  const auto pref = pick_pref(f, i, minimize);
  auto vm = gg::quantitative_values(a, spec, i, pref);
  std::cout << "values:";
  for (gg::Vertex v = 0; v < a.num_vertices(); ++v) std::cout << " " << a.name(v) << "=" << gg::to_text(vm.values[v]);
  std::cout << "\n";
  print_strategy(a, "sigma1", vm.strategy_p1);
  print_strategy(a, "sigma2", vm.strategy_p2);
  std::optional<Rational> t;
  if (!threshold.empty()) t = rational_arg(threshold, "--threshold");
  else if (q && q->threshold) t = q->threshold;
  if (!t || !from) return kYes;
  const Rational& val = vm.values[*from];
  const bool meets = gg::weakly_below(pref, *t, val);
  std::cout << "value " << gg::to_text(val) << (meets ? " meets" : " misses") << " threshold " << gg::to_text(*t)
            << "\n";
  return meets ? kYes : kNo;
}

int cmd_value(const Common& c) {
  auto f = gg::load_game(c.file);
  const auto* q = find_query(f, c.query);
  auto g = f.game();
  const gg::Player i = player_of(f, c, q);
  auto vm = gg::coalition_values(g, i);
  auto from = start_vertex(f, c, q);
  if (from) {
    std::cout << gg::to_text(vm.values[*from]) << "\n";
    return kYes;
  }
  for (gg::Vertex v = 0; v < f.arena.num_vertices(); ++v)
    std::cout << f.arena.name(v) << " " << gg::to_text(vm.values[v]) << "\n";
  return kYes;
}

int cmd_one_player(const Common& c, const std::string& payoff, const std::string& objective,
                   const std::string& lower, const std::string& upper) {
  auto f = gg::load_game(c.file);
  const auto* q = find_query(f, c.query);
  gg::ConstraintQuery cq;
  cq.spec = pick_spec(f, player_of(f, c, q), payoff, objective);
  cq.v0 = require_start(f, c, q);
  if (!lower.empty()) cq.lower = rational_arg(lower, "--lower");
  else if (q && !q->lower.empty()) cq.lower = q->lower[0];
  if (!upper.empty()) cq.upper = rational_arg(upper, "--upper");
  else if (q && !q->upper.empty()) cq.upper = q->upper[0];
  if (cq.spec.is_boolean() && !cq.lower && !cq.upper) cq.lower = Rational(1);
  auto l = gg::solve_one_player(f.arena, cq);
  if (!l) {
    std::cout << "none\n";
    return kNo;
  }
  std::cout << gg::to_string(f.arena, *l) << "\npayoff " << gg::to_text(gg::payoff_of_lasso(f.arena, cq.spec, *l))
            << "\n";
  return kYes;
}

gg::StrategyProfile load_profile(const gg::GameFile& f, const gg::MultiGame& g, const std::string& path, gg::Vertex v0) {
  if (!path.empty()) return gg::witness_from_json(g, gg::read_json_file(path), v0).profile;
  if (f.profile) return *f.profile;
  throw InputError("no profile: pass one or store it in the game file");
}

int cmd_ne(const Common& c, const std::string& lower, const std::string& upper, const std::string& mode,
           const std::string& witness, bool se, bool spe) {
  auto f = gg::load_game(c.file);
  const auto* q = find_query(f, c.query);
  auto g = f.game();
  const auto v0 = require_start(f, c, q);
  const std::size_t k = f.arena.num_players();
  if (mode == "find") {
    gg::Bounds b;
    if (!lower.empty()) b.lower = bounds_arg(lower, k, "--lower");
    else if (q) b.lower = q->lower;
    if (!upper.empty()) b.upper = bounds_arg(upper, k, "--upper");
    else if (q) b.upper = q->upper;
    std::optional<gg::NeWitness> w;
    if (b.lower.empty() && b.upper.empty()) w = gg::construct_ne(g, v0);
    else w = gg::ne_constraint_decide(g, v0, b);
    if (!w) {
      std::cout << "none\n";
      return kNo;
    }
    std::cout << gg::witness_to_json(f.arena, *w).dump(2) << "\n";
    return kYes;
  }
  auto profile = load_profile(f, g, witness, v0);
  auto ne = gg::verify_ne(g, v0, profile);
  bool all = ne.ok;
  std::string line = "NE: ";
  line += ne.ok ? "yes" : "no (player " + std::to_string(*ne.player + 1) + " deviates: " +
                              deviation_edge(f.arena, gg::outcome(f.arena, profile, v0), *ne.deviation) + ")";
  if (se) {
    auto r = gg::verify_se(g, v0, profile);
    all = all && r.ok;
    line += "; SE: ";
    line += r.ok ? "yes" : "no (deviation " + deviation_edge(f.arena, gg::outcome(f.arena, profile, v0), *r.deviation) + ")";
  }
  if (spe) {
    auto r = gg::verify_spe(g, v0, profile);
    all = all && r.ok;
    line += "; SPE: ";
    line += r.ok ? "yes" : "no (subgame at " + f.arena.name(*r.vertex) + ")";
  }
  std::cout << line << "\n";
  return all ? kYes : kNo;
}

int cmd_se_check(const Common& c, const std::string& witness) {
  auto f = gg::load_game(c.file);
  auto g = f.game();
  const auto v0 = require_start(f, c, find_query(f, c.query));
  auto profile = load_profile(f, g, witness, v0);
  auto r = gg::verify_se(g, v0, profile);
  if (r.ok) {
    std::cout << "SE: yes\n";
    return kYes;
  }
  std::cout << "SE: no (player " << *r.player + 1 << ", deviation "
            << deviation_edge(f.arena, gg::outcome(f.arena, profile, v0), *r.deviation) << ", play "
            << gg::to_string(f.arena, *r.deviation) << ")\n";
  return kNo;
}

int cmd_spe_check(const Common& c, const std::string& witness) {
  auto f = gg::load_game(c.file);
  auto g = f.game();
  const auto v0 = require_start(f, c, find_query(f, c.query));
  auto profile = load_profile(f, g, witness, v0);
  auto r = gg::verify_spe(g, v0, profile);
  if (r.ok) {
    std::cout << "SPE: yes\n";
    return kYes;
  }
  std::cout << "SPE: no (subgame at " << f.arena.name(*r.vertex) << ", player " << *r.player + 1 << " deviates to "
            << gg::to_string(f.arena, *r.deviation) << ")\n";
  return kNo;
}

int cmd_target_ds(const std::string& target, const std::string& lambda, std::size_t digits,
                  const std::vector<int>& alphabet, std::size_t depth) {
  const Rational t = rational_arg(target, "--target"), l = rational_arg(lambda, "--lambda");
  if (alphabet.empty()) {
    auto r = gg::target_ds_special(t, l, digits);
    if (!r.yes) {
      std::cout << "no\n";
      return kNo;
    }
    std::cout << "yes " << gg::to_string(*r.certificate) << "\n";
    return kYes;
  }
  if (alphabet.size() != 2) throw InputError("--digits-set expects two digits a,b");
  auto r = gg::target_ds_bounded(alphabet[0], alphabet[1], t, l, depth);
  switch (r.verdict) {
    case gg::Verdict::Yes: std::cout << "yes " << gg::to_string(*r.witness) << "\n"; return kYes;
    case gg::Verdict::No: std::cout << "no\n"; return kNo;
    case gg::Verdict::Unknown: std::cout << "unknown (depth " << depth << " exhausted)\n"; return kNo;
  }
  return kNo;
}

int cmd_export(const Common& c, const std::string& out, std::size_t values_of, const std::string& witness,
               bool use_profile) {
  auto f = gg::load_game(c.file);
  gg::DotOverlay overlay;
  std::vector<Rational> values;
  if (values_of > 0) {
    if (values_of > f.arena.num_players()) throw InputError("--values out of range");
    values = gg::coalition_values(f.game(), values_of - 1).values;
    overlay.values = &values;
  }
  gg::StrategyProfile profile;
  if (!witness.empty()) {
    const auto* q = find_query(f, c.query);
    auto g = f.game();
    profile = gg::witness_from_json(g, gg::read_json_file(witness), require_start(f, c, q)).profile;
    overlay.profile = &profile;
  } else if (use_profile) {
    if (!f.profile) throw InputError("the game file stores no profile");
    overlay.profile = &*f.profile;
  }
  const std::string dot = gg::to_dot(f.arena, overlay);
  if (out.empty() || out == "-") {
    std::cout << dot;
    return kYes;
  }
  std::ofstream os(out);
  if (!os) throw InputError("cannot write " + out);
  os << dot;
  return kYes;
}

void add_common(CLI::App* sub, Common& c, bool with_player) {
  sub->add_option("file", c.file, "game file (JSON)")->required();
  sub->add_option("--from", c.from, "start vertex id");
  sub->add_option("--query", c.query, "named query in the game file supplying defaults");
  if (with_player) sub->add_option("--player", c.player, "player (1-based)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-player quantitative games on graphs"};
  app.require_subcommand(1);
  Common c;
  std::string payoff, objective, threshold, lower, upper, mode, witness, out, target, lambda;
  bool minimize = false, se = false, spe = false, use_profile = false;
  std::size_t values_of = 0, digits = 64, depth = 64;
  std::vector<int> alphabet;

  auto* solve = app.add_subcommand("solve", "zero-sum game of one player against the others");
  add_common(solve, c, true);
  solve->add_option("--payoff", payoff, "payoff such as limsup:w1 or discounted:w1:1/2");
  solve->add_option("--objective", objective, "objective JSON (inline or file)");
  solve->add_option("--threshold", threshold, "value threshold checked at --from");
  solve->add_flag("--min", minimize, "the player minimizes");

  auto* value = app.add_subcommand("value", "coalition game values of a player");
  add_common(value, c, true);

  auto* one = app.add_subcommand("one-player", "find a play with payoff in [lower, upper]");
  add_common(one, c, false);
  one->add_option("--payoff", payoff, "payoff such as mp-sup:w1");
  one->add_option("--objective", objective, "objective JSON (inline or file)");
  one->add_option("--lower", lower, "lower bound");
  one->add_option("--upper", upper, "upper bound");

  auto* ne = app.add_subcommand("ne", "Nash equilibria: find a witness or check a profile");
  add_common(ne, c, false);
  ne->add_option("mode", mode, "find or check")->required()->check(CLI::IsMember({"find", "check"}));
  ne->add_option("witness", witness, "witness or profile JSON (check mode)");
  ne->add_option("--lower", lower, "per-player lower bounds, e.g. 3,2 or _,2");
  ne->add_option("--upper", upper, "per-player upper bounds");
  ne->add_flag("--se", se, "also check the secure refinement");
  ne->add_flag("--spe", spe, "also check subgame perfection");

  auto* sec = app.add_subcommand("se-check", "secure equilibrium check of a profile");
  add_common(sec, c, false);
  sec->add_option("--profile", witness, "witness or profile JSON (default: the file's profile)");

  auto* spec = app.add_subcommand("spe-check", "subgame perfection check of a profile");
  add_common(spec, c, false);
  spec->add_option("--profile", witness, "witness or profile JSON (default: the file's profile)");

  auto* tds = app.add_subcommand("target-ds", "is t a discounted sum of a digit stream?");
  tds->add_option("--target", target, "target t")->required();
  tds->add_option("--lambda", lambda, "discount factor")->required();
  tds->add_option("--max-digits", digits, "digit limit for the certificate");
  tds->add_option("--digits-set", alphabet, "two digits a,b for the bounded search")->delimiter(',');
  tds->add_option("--depth", depth, "search depth for --digits-set");

  auto* exp = app.add_subcommand("export", "Graphviz rendering of a game");
  add_common(exp, c, false);
  exp->add_option("--dot", out, "output path (default: stdout)");
  exp->add_option("--values", values_of, "print this player's values under the vertices");
  exp->add_option("--witness", witness, "draw this witness's profile in bold");
  exp->add_flag("--profile", use_profile, "draw the file's profile in bold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kError;
  }

  try {
    if (solve->parsed()) return cmd_solve(c, payoff, objective, threshold, minimize);
    if (value->parsed()) return cmd_value(c);
    if (one->parsed()) return cmd_one_player(c, payoff, objective, lower, upper);
    if (ne->parsed()) return cmd_ne(c, lower, upper, mode, witness, se, spe);
    if (sec->parsed()) return cmd_se_check(c, witness);
    if (spec->parsed()) return cmd_spe_check(c, witness);
    if (tds->parsed()) return cmd_target_ds(target, lambda, digits, alphabet, depth);
    if (exp->parsed()) return cmd_export(c, out, values_of, witness, use_profile);
  } catch (const gg::BudgetExceeded& e) {
    std::cerr << "gg: search budget exhausted: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "gg: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
