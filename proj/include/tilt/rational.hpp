#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tilt {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exact integer power with small non-negative exponent.
inline Rational pow_rat(const Rational& base, unsigned exp) {
  Rational r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

/// Largest integer <= r.
inline Integer floor_rat(const Rational& r) {
  Integer num = numerator(r), den = denominator(r);  // den > 0 canonical
  Integer q = num / den;
  if (num < 0 && q * den != num) --q;
  return q;
}

/// Smallest integer >= r.
inline Integer ceil_rat(const Rational& r) {
  return -floor_rat(-r);
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// "p/q" (or "p" when q = 1), the canonical textual form used everywhere
/// rationals are serialized.
inline std::string rat_str(const Rational& r) { return r.str(); }

/// Strict parser for exact rational fields: accepts [+-]?digits[/digits]
/// only. Float literals ("1.5", "1e3") and anything else are rejected so
/// lossy values can never sneak into exact arithmetic.
inline std::optional<Rational> try_parse_rational(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s, den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!is_digits(num) || !is_digits(den)) return std::nullopt;
  Integer n{std::string(num)}, d{std::string(den)};
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  return Rational(n, d);
}

inline Rational parse_rational(std::string_view text, const std::string& field) {
  auto r = try_parse_rational(text);
  if (!r)
    throw std::invalid_argument(field + ": expected exact rational \"p/q\" or integer, got \"" +
                                std::string(text) + "\"");
  return *r;
}

}  // namespace tilt
