/*
 * Copyright 2026 The slp Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*!
  \file truth.hpp
  \brief The three truth values of LP and its strong extension, and every
         propositional connective as a function on them.
*/

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <ostream>
#include <string_view>

#include "slp/error.hpp"

namespace slp {

/// Truth values ordered Bot < Both < Top. `Both` is the paradoxical value.
enum class TruthValue : std::uint8_t { Bot = 0, Both = 1, Top = 2 };

constexpr std::strong_ordering operator<=>(TruthValue a, TruthValue b) noexcept {
  return static_cast<std::uint8_t>(a) <=> static_cast<std::uint8_t>(b);
}

/// Enumeration order used by truth tables, valuation sweeps and function
/// tables: Top first, then Both, then Bot.
inline constexpr std::array<TruthValue, 3> kEnumerationOrder{TruthValue::Top, TruthValue::Both,
                                                             TruthValue::Bot};

/// Position of `v` in `kEnumerationOrder`.
constexpr unsigned enumeration_index(TruthValue v) noexcept {
  return 2u - static_cast<unsigned>(v);
}

constexpr TruthValue from_enumeration_index(unsigned i) noexcept {
  return static_cast<TruthValue>(2u - i);
}

/// Exact rational used for the numeric reading of truth values.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Rational() = default;
  constexpr Rational(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    auto g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  friend constexpr bool operator==(const Rational&, const Rational&) = default;
  friend constexpr std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num * b.den <=> b.num * a.den;
  }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    os << r.num;
    if (r.den != 1) os << '/' << r.den;
    return os;
  }
};

constexpr Rational to_numeric(TruthValue v) noexcept {
  switch (v) {
    case TruthValue::Top: return Rational{1};
    case TruthValue::Both: return Rational{1, 2};
    case TruthValue::Bot: break;
  }
  return Rational{0};
}

inline TruthValue from_numeric(Rational r) {
  if (r == Rational{1}) return TruthValue::Top;
  if (r == Rational{1, 2}) return TruthValue::Both;
  if (r == Rational{0}) return TruthValue::Bot;
  throw DomainError("no truth value has numeric value " + std::to_string(r.num) + "/" +
                    std::to_string(r.den));
}

// Connectives. conj/disj are min/max in the truth order.

constexpr TruthValue neg(TruthValue v) noexcept {
  return static_cast<TruthValue>(2u - static_cast<unsigned>(v));
}

constexpr TruthValue conj(TruthValue a, TruthValue b) noexcept { return a < b ? a : b; }

constexpr TruthValue disj(TruthValue a, TruthValue b) noexcept { return a < b ? b : a; }

constexpr TruthValue weak_imp(TruthValue a, TruthValue b) noexcept { return disj(neg(a), b); }

constexpr TruthValue weak_iff(TruthValue a, TruthValue b) noexcept {
  return conj(weak_imp(a, b), weak_imp(b, a));
}

/// Strong implication: Top when a <= b, Bot otherwise. Never Both.
constexpr TruthValue strong_imp(TruthValue a, TruthValue b) noexcept {
  return a <= b ? TruthValue::Top : TruthValue::Bot;
}

constexpr TruthValue strong_iff(TruthValue a, TruthValue b) noexcept {
  return a == b ? TruthValue::Top : TruthValue::Bot;
}

/// The five two-valued unary status operators.
enum class StatusTest : std::uint8_t {
  IsTop,      // p^t, "p is true"
  IsBoth,     // p^p, "p is paradoxical"
  IsBot,      // p^f, "p is false"
  NotFalse,   // p^nf
  Consistent  // p^c
};

inline constexpr std::array<StatusTest, 5> kAllStatusTests{
    StatusTest::IsTop, StatusTest::IsBoth, StatusTest::IsBot, StatusTest::NotFalse,
    StatusTest::Consistent};

constexpr TruthValue status(TruthValue v, StatusTest which) noexcept {
  bool r = false;
  switch (which) {
    case StatusTest::IsTop: r = v == TruthValue::Top; break;
    case StatusTest::IsBoth: r = v == TruthValue::Both; break;
    case StatusTest::IsBot: r = v == TruthValue::Bot; break;
    case StatusTest::NotFalse: r = v != TruthValue::Bot; break;
    case StatusTest::Consistent: r = v != TruthValue::Both; break;
  }
  return r ? TruthValue::Top : TruthValue::Bot;
}

/// Designated values are those strictly above Bot.
constexpr bool designated(TruthValue v) noexcept { return v > TruthValue::Bot; }

constexpr bool is_classical(TruthValue v) noexcept { return v != TruthValue::Both; }

// Serialization: "T", "P", "F".

constexpr char to_char(TruthValue v) noexcept {
  switch (v) {
    case TruthValue::Top: return 'T';
    case TruthValue::Both: return 'P';
    case TruthValue::Bot: break;
  }
  return 'F';
}

constexpr std::optional<TruthValue> truth_value_from_char(char c) noexcept {
  switch (c) {
    case 'T': return TruthValue::Top;
    case 'P': return TruthValue::Both;
    case 'F': return TruthValue::Bot;
    default: return std::nullopt;
  }
}

inline TruthValue parse_truth_value(std::string_view s) {
  if (s.size() == 1) {
    if (auto v = truth_value_from_char(s[0])) return *v;
  }
  throw DomainError("invalid truth value '" + std::string(s) + "' (expected T, P or F)");
}

/// Suffix used by the concrete grammar for each status operator.
constexpr std::string_view status_suffix(StatusTest which) noexcept {
  switch (which) {
    case StatusTest::IsTop: return "t";
    case StatusTest::IsBoth: return "p";
    case StatusTest::IsBot: return "f";
    case StatusTest::NotFalse: return "nf";
    case StatusTest::Consistent: break;
  }
  return "c";
}

constexpr std::optional<StatusTest> status_from_suffix(std::string_view s) noexcept {
  for (auto t : kAllStatusTests)
    if (status_suffix(t) == s) return t;
  return std::nullopt;
}

inline std::ostream& operator<<(std::ostream& os, TruthValue v) { return os << to_char(v); }

}  // namespace slp
