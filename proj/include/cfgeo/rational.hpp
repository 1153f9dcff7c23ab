#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "cfgeo/error.hpp"

namespace cfgeo {

using Integer = boost::multiprecision::cpp_int;
/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  return true;
}

// Decimal digits to Integer. cpp_int reads a leading 0 as an octal prefix, so strip it.
inline Integer decimal_integer(std::string_view digits) {
  auto first = digits.find_first_not_of('0');
  return first == std::string_view::npos ? Integer(0) : Integer(std::string(digits.substr(first)));
}

}  // namespace detail

/// Parses "12", "-3/4", or a finite decimal such as "-1.125" exactly.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw contract_error("not an exact number: '" + std::string(text) + "'");
  };
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) return fail();
    Integer d = detail::decimal_integer(den);
    if (d == 0) return fail();
    value = Rational(detail::decimal_integer(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot), frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) return fail();
    if ((!whole.empty() && !detail::all_digits(whole)) || (!frac.empty() && !detail::all_digits(frac)))
      return fail();
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(frac.size()));
    value = Rational(detail::decimal_integer(std::string(whole) + std::string(frac)), scale);
  } else {
    if (!detail::all_digits(s)) return fail();
    value = Rational(detail::decimal_integer(s));
  }
  return negative ? Rational(-value) : value;
}

/// "p/q", or "p" when the denominator is 1. Parses back to the same value.
inline std::string to_string(const Rational& r) {
  const Integer& den = boost::multiprecision::denominator(r);
  std::string out = boost::multiprecision::numerator(r).str();
  if (den != 1) out += "/" + den.str();
  return out;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Greatest integer not exceeding r.
inline Integer floor(const Rational& r) {
  const Integer& num = boost::multiprecision::numerator(r);
  const Integer& den = boost::multiprecision::denominator(r);
  Integer q = num / den;  // truncates toward zero
  if (num < 0 && q * den != num) q -= 1;
  return q;
}

}  // namespace cfgeo
