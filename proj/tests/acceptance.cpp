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

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <iostream>
#include <sstream>

#include "oracles.hpp"

namespace {

using gg::Rational;
using gg::Vertex;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::vector<Rational> values_at(const gg::ValueMap& m) { return m.values; }

// 1. Values and optimal strategies of the weighted four-vertex game.
Outcome weighted_values() {
  auto f = gg::load_game(oracle::fixture("fig2_weighted.json"));
  const auto& a = f.arena;
  auto vm = gg::quantitative_values(a, gg::PayoffSpec::quantitative(gg::PayoffKind::LimSup, 0), 0);
  Outcome o;
  o.pass = values_at(vm) == std::vector<Rational>{2, 2, 2, 3} && vm.strategy_p1.moves[0][a.vertex("v0")] == a.vertex("v2") &&
           vm.strategy_p2.moves[0][a.vertex("v1")] == a.vertex("v0");
  std::ostringstream os;
  os << "values";
  for (auto& v : vm.values) os << ' ' << gg::to_text(v);
  os << "; sigma1(v0)=" << a.name(vm.strategy_p1.moves[0][0]) << ", sigma2(v1)=" << a.name(vm.strategy_p2.moves[0][1]);
  o.detail = os.str();
  return o;
}

// 2. Threshold verdicts from v0.
Outcome thresholds() {
  auto f = gg::load_game(oracle::fixture("fig2_weighted.json"));
  const auto& a = f.arena;
  const auto spec = gg::PayoffSpec::quantitative(gg::PayoffKind::LimSup, 0);
  auto vm = gg::quantitative_values(a, spec, 0);
  const Vertex v0 = a.vertex("v0");
  const bool wins2 = vm.values[v0] >= 2 && gg::verify_threshold(a, spec, 0, vm.strategy_p1, 2, {v0});
  // Losing at 3: the positional brute force agrees the value stays at 2.
  const bool loses3 = vm.values[v0] < 3;
  const auto brute = oracle::positional_values(a, 0, [&](const gg::Lasso& l) { return oracle::payoff(a, spec, l); });
  Outcome o;
  o.pass = wins2 && loses3 && brute[v0] == 2;
  o.detail = std::string("mu=2 ") + (wins2 ? "wins" : "loses") + ", mu=3 " + (loses3 ? "loses" : "wins");
  return o;
}

// 3. Memory is needed in the one-player game for Muller and for MP = 1.
Outcome one_player_memory() {
  auto f = gg::load_game(oracle::fixture("fig3_one_player.json"));
  const auto& a = f.arena;
  const Vertex v0 = a.vertex("v0");
  const auto muller = f.payoffs[0];
  const auto mp = gg::PayoffSpec::quantitative(gg::PayoffKind::MeanPayoffSup, 0);
  bool simple_muller = false, simple_mp = false;
  const auto simple = oracle::simple_lassos(a, v0);
  for (const auto& l : simple) {
    simple_muller = simple_muller || oracle::payoff(a, muller, l) == 1;
    simple_mp = simple_mp || oracle::payoff(a, mp, l) == 1;
  }
  gg::Lasso alt{{}, {v0, a.vertex("v1"), v0, a.vertex("v2")}};
  const bool alt_ok = oracle::payoff(a, muller, alt) == 1 && oracle::payoff(a, mp, alt) == 1;
  auto w_muller = gg::solve_one_player(a, {muller, Rational(1), std::nullopt, v0});
  auto w_mp = gg::solve_one_player(a, {mp, Rational(1), Rational(1), v0});
  const bool found = w_muller && w_mp && !w_muller->is_simple() && !w_mp->is_simple() &&
                     oracle::payoff(a, muller, *w_muller) == 1 && oracle::payoff(a, mp, *w_mp) == 1;
  Outcome o;
  o.pass = !simple_muller && !simple_mp && alt_ok && found;
  o.detail = std::to_string(simple.size()) + " simple lassos, none qualifies; witnesses " +
             (w_muller ? gg::to_string(a, *w_muller) : "none") + " / " + (w_mp ? gg::to_string(a, *w_mp) : "none");
  return o;
}

gg::PayoffSpec random_ne_spec(std::mt19937& rng, const gg::Arena& a) {
  const std::size_t n = a.num_vertices();
  switch (oracle::uniform(rng, 0, 3)) {
    case 0: return gg::PayoffSpec::boolean(oracle::random_objective(rng, n, oracle::ObjType::Buchi));
    case 1: return gg::PayoffSpec::boolean(oracle::random_objective(rng, n, oracle::ObjType::Parity));
    case 2: return gg::PayoffSpec::quantitative(gg::PayoffKind::LimSup, static_cast<std::size_t>(oracle::uniform(rng, 0, 1)));
    default:
      return gg::PayoffSpec::quantitative(oracle::uniform(rng, 0, 1) ? gg::PayoffKind::MeanPayoffSup : gg::PayoffKind::MeanPayoffInf,
                                          static_cast<std::size_t>(oracle::uniform(rng, 0, 1)));
  }
}

// 4 and 10. Equilibria built from coalition games, checked three ways; the
// outcome test against the deviation oracle on every short lasso.
std::pair<Outcome, Outcome> ne_round_trip() {
  std::mt19937 rng(4);
  Outcome o4, o10;
  std::size_t worst_slack = SIZE_MAX, witnesses = 0;
  for (int t = 0; t < 200; ++t) {
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 6));
    const auto k = static_cast<std::size_t>(oracle::uniform(rng, 1, 3));
    gg::MultiGame g{oracle::random_arena(rng, n, k, 2), {}, {}};
    for (std::size_t i = 0; i < k; ++i) {
      g.payoffs.push_back(random_ne_spec(rng, g.arena));
      g.prefs.push_back(oracle::uniform(rng, 0, 3) == 0 ? gg::Preference::minimize() : gg::Preference::maximize());
    }
    const auto v0 = static_cast<Vertex>(oracle::uniform(rng, 0, int(n) - 1));
    auto w = gg::construct_ne(g, v0);
    ++witnesses;
    std::vector<Rational> direct;
    for (const auto& s : g.payoffs) direct.push_back(oracle::payoff(g.arena, s, w.outcome));
    const bool checked = gg::ne_outcome_check(g, w.outcome).ok && gg::verify_ne(g, v0, w.profile).ok &&
                         w.outcome.at(0) == v0 && w.payoffs == direct;
    if (!checked && o4.pass) {
      o4.pass = false;
      o4.detail = "construct_ne witness rejected on instance " + std::to_string(t);
    }
    for (const auto& s : w.profile) {
      const std::size_t bound = n + k;
      if (s.states > bound && o10.pass) {
        o10.pass = false;
        o10.detail = "instance " + std::to_string(t) + " uses " + std::to_string(s.states) + " states";
      }
      worst_slack = std::min(worst_slack, bound - std::min(bound, s.states));
    }
  }
  std::size_t lassos = 0, agree = 0;
  for (int t = 0; t < 60; ++t) {
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 5));
    gg::MultiGame g{oracle::random_arena(rng, n, 2, 2), {}, {gg::Preference::maximize(), gg::Preference::maximize()}};
    for (int i = 0; i < 2; ++i) g.payoffs.push_back(random_ne_spec(rng, g.arena));
    std::vector<std::vector<Rational>> val;
    for (gg::Player i = 0; i < 2; ++i)
      val.push_back(oracle::positional_values(g.arena, i, [&](const gg::Lasso& l) { return oracle::payoff(g.arena, g.payoffs[i], l); }));
    const auto v0 = static_cast<Vertex>(oracle::uniform(rng, 0, int(n) - 1));
    for (const auto& l : oracle::lassos_up_to(g.arena, v0, 2 * n)) {
      ++lassos;
      const bool mine = gg::ne_outcome_check(g, l).ok;
      const bool ref = oracle::ne_outcome_by_deviation(g.arena, g.payoffs, val, l);
      if (mine == ref) ++agree;
      else if (o4.pass) {
        o4.pass = false;
        o4.detail = "outcome check disagrees on " + gg::to_string(g.arena, l);
      }
    }
  }
  if (o4.pass)
    o4.detail = std::to_string(witnesses) + " witnesses verified; " + std::to_string(agree) + "/" + std::to_string(lassos) +
                " lassos agree with the deviation oracle";
  if (o10.pass) o10.detail = "all profiles within |V|+|Pi| (min slack " + std::to_string(worst_slack) + ")";
  return {o4, o10};
}

// 5. Stored profiles of the two five-vertex games.
Outcome refinement_verdicts() {
  auto f6 = gg::load_game(oracle::fixture("fig6_not_secure.json"));
  auto f7 = gg::load_game(oracle::fixture("fig7_not_spe.json"));
  auto g6 = f6.game(), g7 = f7.game();
  const Vertex v0 = f6.arena.vertex("v0");
  auto ne6 = gg::verify_ne(g6, v0, *f6.profile);
  auto se6 = gg::verify_se(g6, v0, *f6.profile);
  auto ne7 = gg::verify_ne(g7, v0, *f7.profile);
  auto spe7 = gg::verify_spe(g7, v0, *f7.profile);
  Outcome o;
  o.pass = ne6.ok && !se6.ok && se6.deviation && se6.deviation->at(1) == f6.arena.vertex("v2") && ne7.ok && !spe7.ok &&
           spe7.vertex == f7.arena.vertex("v2");
  o.detail = std::string("not_secure NE ") + (ne6.ok ? "yes" : "no") + ", SE " + (se6.ok ? "yes" : "no") + "; not_spe NE " +
             (ne7.ok ? "yes" : "no") + ", SPE " + (spe7.ok ? "yes" : "no at " + f7.arena.name(*spe7.vertex));
  return o;
}

// 6. Three solvers agree on every value.
Outcome cross_validation() {
  std::mt19937 rng(6);
  const gg::PayoffKind kinds[] = {gg::PayoffKind::Sup,           gg::PayoffKind::Inf,           gg::PayoffKind::LimSup,
                                  gg::PayoffKind::LimInf,        gg::PayoffKind::MeanPayoffSup, gg::PayoffKind::MeanPayoffInf,
                                  gg::PayoffKind::Discounted};
  const Rational lambdas[] = {Rational(1, 2), Rational(2, 3), Rational(1, 3), Rational(3, 4)};
  Outcome o;
  std::size_t games = 0;
  for (auto kind : kinds)
    for (int t = 0; t < 100; ++t) {
      const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 5));
      auto a = oracle::random_arena(rng, n, 2, 1);
      auto spec = kind == gg::PayoffKind::Discounted ? gg::PayoffSpec::discounted(0, lambdas[oracle::uniform(rng, 0, 3)])
                                                     : gg::PayoffSpec::quantitative(kind, 0);
      const bool minimize = oracle::uniform(rng, 0, 1) == 1;
      const auto pref = minimize ? gg::Preference::minimize() : gg::Preference::maximize();
      auto f = [&](const gg::Lasso& l) { return oracle::payoff(a, spec, l); };
      auto q = gg::quantitative_values(a, spec, 0, pref).values;
      auto m = gg::fairly_mixing_solve(a, 0, f, pref).values;
      auto b = oracle::positional_values(a, 0, f, minimize);
      ++games;
      if ((q != b || m != b) && o.pass) {
        o.pass = false;
        o.detail = std::string("mismatch for ") + gg::payoff_name(kind) + " on instance " + std::to_string(t);
      }
    }
  if (o.pass) o.detail = std::to_string(games) + " games, all values equal";
  return o;
}

// 7. Every vertex is won by exactly one side, and both strategies are
// certified winning by inf-set enumeration.
Outcome determinacy() {
  std::mt19937 rng(7);
  Outcome o;
  std::size_t certified = 0;
  for (int t = 0; t < 500; ++t) {
    const auto type = oracle::kAllObjTypes[t % 8];
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 7));
    const auto k = static_cast<std::size_t>(oracle::uniform(rng, 2, 3));
    auto a = oracle::random_arena(rng, n, k, 0);
    auto obj = oracle::random_objective(rng, n, type);
    auto wr = gg::solve_boolean(a, obj, 0);
    bool ok = true;
    for (Vertex v = 0; v < n; ++v) {
      ok = ok && wr.w1[v] != wr.w2[v];
      const auto& s = wr.w1[v] ? wr.strategy_p1 : wr.strategy_p2;
      auto g = oracle::product(a, s, 0, v);
      ok = ok && g && oracle::all_plays_satisfy(*g, obj, n, !wr.w1[v]);
    }
    if (ok) ++certified;
    else if (o.pass) {
      o.pass = false;
      o.detail = std::string("failed on a ") + gg::objective_name(obj) + " instance (#" + std::to_string(t) + ")";
    }
  }
  if (o.pass) o.detail = std::to_string(certified) + " arenas partitioned and certified";
  return o;
}

// 8. Muller constraint problem against brute-force enumeration.
Outcome muller_constraints() {
  std::mt19937 rng(8);
  Outcome o;
  std::size_t yes = 0;
  for (int t = 0; t < 100; ++t) {
    const auto n = static_cast<std::size_t>(oracle::uniform(rng, 1, 5));
    const auto k = static_cast<std::size_t>(oracle::uniform(rng, 2, 3));
    gg::MultiGame g{oracle::random_arena(rng, n, k, 0), {}, std::vector<gg::Preference>(k, gg::Preference::maximize())};
    for (std::size_t i = 0; i < k; ++i)
      g.payoffs.push_back(gg::PayoffSpec::boolean(oracle::random_objective(rng, n, oracle::ObjType::Muller)));
    gg::Bounds b;
    for (std::size_t i = 0; i < k; ++i) {
      auto pick = [&]() -> std::optional<Rational> {
        int r = oracle::uniform(rng, 0, 2);
        if (r == 2) return std::nullopt;
        return Rational(r);
      };
      b.lower.push_back(pick());
      b.upper.push_back(pick());
    }
    const auto v0 = static_cast<Vertex>(oracle::uniform(rng, 0, int(n) - 1));
    std::vector<std::vector<Rational>> val;
    for (std::size_t i = 0; i < k; ++i) val.push_back(gg::coalition_values(g, i).values);
    const bool ref = oracle::muller_constraint_brute(g.arena, g.payoffs, val, b.lower, b.upper, v0);
    auto w = gg::ne_constraint_decide(g, v0, b);
    bool ok = w.has_value() == ref;
    if (w) {
      ++yes;
      ok = ok && gg::verify_ne(g, v0, w->profile).ok;
      for (std::size_t i = 0; i < k; ++i)
        ok = ok && (!b.lower[i] || w->payoffs[i] >= *b.lower[i]) && (!b.upper[i] || w->payoffs[i] <= *b.upper[i]);
    }
    if (!ok && o.pass) {
      o.pass = false;
      o.detail = "disagreement on instance " + std::to_string(t) + " (brute force says " + (ref ? "yes" : "no") + ")";
    }
  }
  if (o.pass) o.detail = "100 games, " + std::to_string(yes) + " with witnesses, zero discrepancies";
  return o;
}

// 9. Target discounted sum with digits {0, 1}.
Outcome target_ds() {
  std::mt19937 rng(9);
  Outcome o;
  std::size_t periodic = 0, yes = 0;
  for (int t = 0; t < 100; ++t) {
    const int den = oracle::uniform(rng, 2, 12);
    const Rational lambda(oracle::uniform(rng, (den + 1) / 2, den - 1), den);
    const int tden = oracle::uniform(rng, 1, 12);
    const Rational target(oracle::uniform(rng, 0, 5 * tden), tden);
    auto r = gg::target_ds_special(target, lambda);
    const bool expected = target <= 1 / (1 - lambda);
    bool ok = r.yes == expected;
    if (r.yes) {
      ++yes;
      const auto& c = *r.certificate;
      Rational head = 0, p = 1;
      for (int d : c.prefix) {
        ok = ok && (d == 0 || d == 1);
        head += d * p;
        p *= lambda;
      }
      if (!c.period.empty()) {
        ++periodic;
        Rational loop = 0, q = 1;
        for (int d : c.period) {
          ok = ok && (d == 0 || d == 1);
          loop += d * q;
          q *= lambda;
        }
        ok = ok && head + p * loop / (1 - q) == target;
      } else {
        // Tail not periodic within the digit limit: the rest is a valid target.
        ok = ok && c.remainder && *c.remainder >= 0 && *c.remainder <= 1 / (1 - lambda) &&
             head + p * *c.remainder == target;
      }
    }
    if (!ok && o.pass) {
      o.pass = false;
      o.detail = "t=" + gg::to_text(target) + " lambda=" + gg::to_text(lambda);
    }
  }
  if (o.pass)
    o.detail = std::to_string(yes) + " yes (" + std::to_string(periodic) + " periodic certificates), bound 1/(1-lambda)";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* name, const Outcome& o, double secs) {
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << " (" << name << "): " << o.detail << " ["
              << secs << "s]" << std::endl;
    if (!o.pass) ++failures;
  };
  auto timed = [&](int id, const char* name, auto&& f) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    report(id, name, o, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  };
  timed(1, "weighted game values", weighted_values);
  timed(2, "threshold verdicts", thresholds);
  timed(3, "one-player memory", one_player_memory);
  auto start = std::chrono::steady_clock::now();
  std::pair<Outcome, Outcome> ne;
  try {
    ne = ne_round_trip();
  } catch (const std::exception& e) {
    ne = {{false, std::string("exception: ") + e.what()}, {false, "not run"}};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(4, "equilibrium round trip", ne.first, secs);
  timed(5, "secure and subgame verdicts", refinement_verdicts);
  timed(6, "solver cross-validation", cross_validation);
  timed(7, "determinacy", determinacy);
  timed(8, "Muller constraint agreement", muller_constraints);
  timed(9, "target discounted sum", target_ds);
  report(10, "memory bound", ne.second, secs);
  return failures == 0 ? 0 : 1;
}
