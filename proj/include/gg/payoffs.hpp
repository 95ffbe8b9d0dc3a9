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

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gg/arena.hpp"
#include "gg/objectives.hpp"
#include "gg/rational.hpp"

namespace gg {

enum class PayoffKind { Sup, Inf, LimSup, LimInf, MeanPayoffSup, MeanPayoffInf, Discounted, Boolean };

inline const char* payoff_name(PayoffKind k) {
  switch (k) {
    case PayoffKind::Sup: return "sup";
    case PayoffKind::Inf: return "inf";
    case PayoffKind::LimSup: return "limsup";
    case PayoffKind::LimInf: return "liminf";
    case PayoffKind::MeanPayoffSup: return "mp-sup";
    case PayoffKind::MeanPayoffInf: return "mp-inf";
    case PayoffKind::Discounted: return "discounted";
    case PayoffKind::Boolean: return "boolean";
  }
  return "?";
}

/// A payoff function. Quantitative kinds read the 0-based weight `profile`;
/// Discounted also uses `lambda`; Boolean wraps an objective and pays 0 or 1.
struct PayoffSpec {
  PayoffKind kind = PayoffKind::Sup;
  std::size_t profile = 0;
  Rational lambda = 0;
  std::optional<Objective> objective;

  static PayoffSpec quantitative(PayoffKind k, std::size_t profile) { return {k, profile, 0, {}}; }
  static PayoffSpec discounted(std::size_t profile, Rational lambda) {
    return {PayoffKind::Discounted, profile, std::move(lambda), {}};
  }
  static PayoffSpec boolean(Objective o) { return {PayoffKind::Boolean, 0, 0, std::move(o)}; }

  bool is_boolean() const { return kind == PayoffKind::Boolean; }
};

inline std::vector<std::string> check_payoff(const PayoffSpec& spec, const Arena& arena) {
  std::vector<std::string> issues;
  if (spec.is_boolean()) {
    if (!spec.objective) issues.push_back("Boolean payoff without an objective");
    else issues = check_objective(*spec.objective, arena.num_vertices());
    return issues;
  }
  if (spec.profile >= arena.num_weight_profiles())
    issues.push_back("weight profile " + std::to_string(spec.profile + 1) + " is absent");
  if (spec.kind == PayoffKind::Discounted && (spec.lambda <= 0 || spec.lambda >= 1))
    issues.push_back("discount factor must lie strictly between 0 and 1");
  return issues;
}

/// Exact payoff of the play prefix.cycle^omega.
inline Rational payoff_of_lasso(const Arena& arena, const PayoffSpec& spec, const Lasso& l) {
  if (l.cycle.empty()) throw std::invalid_argument("lasso with empty cycle");
  if (spec.is_boolean()) {
    if (!spec.objective) throw std::invalid_argument("Boolean payoff without an objective");
    return satisfies(*spec.objective, l) ? 1 : 0;
  }
  const std::size_t h = l.prefix.size();
  const std::size_t g = l.cycle.size();
  auto w = [&](std::size_t i) -> const Rational& {
    return arena.weight(spec.profile, l.at(i), l.at(i + 1));
  };
  switch (spec.kind) {
    case PayoffKind::Sup:
    case PayoffKind::Inf: {
      Rational best = w(0);
      for (std::size_t i = 1; i < h + g; ++i)
        best = spec.kind == PayoffKind::Sup ? std::max(best, w(i)) : std::min(best, w(i));
      return best;
    }
    case PayoffKind::LimSup:
    case PayoffKind::LimInf: {
      Rational best = w(h);
      for (std::size_t i = h + 1; i < h + g; ++i)
        best = spec.kind == PayoffKind::LimSup ? std::max(best, w(i)) : std::min(best, w(i));
      return best;
    }
    case PayoffKind::MeanPayoffSup:
    case PayoffKind::MeanPayoffInf: {
      Rational sum = 0;
      for (std::size_t i = h; i < h + g; ++i) sum += w(i);
      return sum / static_cast<long long>(g);
    }
    case PayoffKind::Discounted: {
      const Rational& lam = spec.lambda;
      Rational head = 0, power = 1;
      for (std::size_t i = 0; i < h; ++i) {
        head += w(i) * power;
        power *= lam;
      }
      Rational loop = 0, p = 1;
      for (std::size_t i = h; i < h + g; ++i) {
        loop += w(i) * p;
        p *= lam;
      }
      return head + power * loop / (1 - p);
    }
    case PayoffKind::Boolean: break;
  }
  throw std::logic_error("unreachable payoff kind");
}

// ---------------------------------------------------------------------------
// Preferences

enum class Order { Less, Equal, Greater };

struct Preference {
  enum class Kind { Maximize, Minimize, Secure };
  Kind kind = Kind::Maximize;
  std::size_t own = 0;  // Secure only: index of the player in the payoff pair

  static Preference maximize() { return {Kind::Maximize, 0}; }
  static Preference minimize() { return {Kind::Minimize, 0}; }
  static Preference secure(std::size_t own) { return {Kind::Secure, own}; }
};

/// Compares payoff vectors under a preference. Less means p is strictly less
/// preferred than q. Maximize and Minimize take one value each; Secure takes
/// a pair and, with own index i, orders by p_i first and then prefers a lower
/// payoff for the other player.
inline Order compare(const Preference& pref, std::span<const Rational> p,
                     std::span<const Rational> q) {
  auto cmp = [](const Rational& a, const Rational& b) {
    return a < b ? Order::Less : (b < a ? Order::Greater : Order::Equal);
  };
  switch (pref.kind) {
    case Preference::Kind::Maximize:
    case Preference::Kind::Minimize: {
      if (p.size() != 1 || q.size() != 1)
        throw std::invalid_argument("maximize/minimize compare single payoffs");
      Order o = cmp(p[0], q[0]);
      if (pref.kind == Preference::Kind::Minimize && o != Order::Equal)
        o = o == Order::Less ? Order::Greater : Order::Less;
      return o;
    }
    case Preference::Kind::Secure: {
      if (p.size() != 2 || q.size() != 2 || pref.own > 1)
        throw std::invalid_argument("secure preference compares payoff pairs");
      const std::size_t i = pref.own, k = 1 - pref.own;
      if (Order o = cmp(p[i], q[i]); o != Order::Equal) return o;
      Order o = cmp(p[k], q[k]);
      if (o == Order::Equal) return o;
      return o == Order::Less ? Order::Greater : Order::Less;
    }
  }
  throw std::logic_error("unreachable preference");
}

inline Order compare(const Preference& pref, const Rational& p, const Rational& q) {
  return compare(pref, std::span<const Rational>(&p, 1), std::span<const Rational>(&q, 1));
}

/// p is weakly less preferred than q (p is at most q).
inline bool weakly_below(const Preference& pref, const Rational& p, const Rational& q) {
  return compare(pref, p, q) != Order::Greater;
}

// ---------------------------------------------------------------------------
// Classification

enum class PayoffClass { PrefixIndependent, PrefixLinear, ConditionOneOnly };

inline const char* class_name(PayoffClass c) {
  switch (c) {
    case PayoffClass::PrefixIndependent: return "prefix_independent";
    case PayoffClass::PrefixLinear: return "prefix_linear";
    case PayoffClass::ConditionOneOnly: return "condition_1_only";
  }
  return "?";
}

inline PayoffClass classify(const PayoffSpec& spec) {
  switch (spec.kind) {
    case PayoffKind::Sup:
    case PayoffKind::Inf: return PayoffClass::ConditionOneOnly;
    case PayoffKind::Discounted: return PayoffClass::PrefixLinear;
    case PayoffKind::Boolean:
      if (spec.objective && !is_prefix_independent(*spec.objective)) return PayoffClass::ConditionOneOnly;
      return PayoffClass::PrefixIndependent;
    default: return PayoffClass::PrefixIndependent;
  }
}

}  // namespace gg
