// SPDX-FileCopyrightText: 2026 vacindex contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <type_traits>

#include "vacindex/errors.hpp"

namespace vacindex {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kPiSq = std::numbers::pi * std::numbers::pi;

/// Exact scalar backend. Arithmetic over cpp_rational is closed and
/// equality is decidable, which is what certifies boundary counts.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

template <class S>
inline constexpr bool is_exact_v = !std::is_floating_point_v<S>;

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.template convert_to<double>(); }

template <class S>
S scalar_from_int(long long v) {
  return S(v);
}

inline double scalar_abs(double x) { return std::fabs(x); }
inline Rational scalar_abs(const Rational& x) { return x < 0 ? Rational(-x) : x; }

/// Comparison band around `level`: zero on the exact backend, a relative
/// tolerance with an absolute floor on the float backend.
template <class S>
S comparison_band(const S& level, double tol) {
  if constexpr (is_exact_v<S>) {
    (void)level;
    (void)tol;
    return S(0);
  } else {
    return tol * std::max(1.0, std::fabs(level));
  }
}

/// floor(sqrt(x)) for a non-negative rational, using integer square roots.
/// floor(sqrt(x)) == floor(sqrt(floor(x))) for real x >= 0.
inline BigInt floor_sqrt(const Rational& x) {
  if (x < 0) throw Error("floor_sqrt: negative argument");
  BigInt fl = numerator(x) / denominator(x);
  return boost::multiprecision::sqrt(fl);
}

/// Exact square root of a rational, when it is one.
inline std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  BigInt n = numerator(x), d = denominator(x);
  BigInt sn = boost::multiprecision::sqrt(n), sd = boost::multiprecision::sqrt(d);
  if (sn * sn != n || sd * sd != d) return std::nullopt;
  return Rational(sn, sd);
}

/// Parses "p", "-p" or "p/q" into a rational. Decimal or symbolic syntax is
/// rejected here; callers route decimals to the float backend.
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& s) -> BigInt {
    if (s.empty()) throw ParseError("empty integer in rational '" + text + "'");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw ParseError("bad integer in rational '" + text + "'");
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError("bad integer in rational '" + text + "'");
    return BigInt(s);
  };
  if (slash == std::string::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in rational '" + text + "'");
  return Rational(num, den);
}

inline std::string format_rational(const Rational& x) {
  std::ostringstream os;
  os << numerator(x);
  if (denominator(x) != 1) os << '/' << denominator(x);
  return os.str();
}

/// True when the token is an exact-rational literal ("3", "-1/2").
inline bool looks_rational(const std::string& text) {
  if (text.empty()) return false;
  std::size_t i = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  bool digits = false, slash = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits = true;
    } else if (c == '/' && !slash && digits) {
      slash = true;
      digits = false;
    } else {
      return false;
    }
  }
  return digits;
}

}  // namespace vacindex
