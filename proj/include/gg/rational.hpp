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

#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gg {

/// Exact arbitrary-precision rational. Every weight, payoff, bound and
/// discount factor in the library is one of these; no floating point is used
/// on any decision path.
/// Expression templates are off so `auto` and `?:` behave like plain values.
using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// Parses "p/q", "p" or a plain decimal such as "-1.25".
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    return std::invalid_argument("malformed rational '" + std::string(text) + "'");
  };
  if (text.empty()) throw fail();
  auto is_integer = [](std::string_view s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  auto to_integer = [](std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = text.substr(0, slash);
    auto den = text.substr(slash + 1);
    if (!is_integer(num) || !is_integer(den)) throw fail();
    Integer n = to_integer(num), d = to_integer(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    // The Boost backend rejects negative denominators.
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return Rational(n, d);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    const bool negative = !whole.empty() && whole[0] == '-';
    if (whole == "-" || whole == "+" || whole.empty()) whole = "0";
    if (!is_integer(whole) || frac.empty()) throw fail();
    for (char c : frac)
      if (c < '0' || c > '9') throw fail();
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Rational r(to_integer(whole));
    Rational f(to_integer(frac), scale);
    if (negative) return r - f;
    return r + f;
  }
  if (!is_integer(text)) throw fail();
  return Rational(to_integer(text));
}

/// Wire form: always "p/q" with q > 0, e.g. "3/1", "-2/3".
inline std::string to_wire(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Human form: "3" for integers, "2/3" otherwise.
inline std::string to_text(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace gg
