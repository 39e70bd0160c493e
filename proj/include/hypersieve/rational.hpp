#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace hypersieve {

/// Exact rational scalar. Expression templates are disabled so the type
/// behaves like a plain value inside Eigen kernels and generic code.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

/// Parses "p" or "p/q" (optional leading '-' or '+', q > 0). Throws
/// Error(ParseError) on anything else. The result is in lowest terms.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" form; parse_rational(format_rational(r)) == r.
std::string format_rational(const Rational& r);

inline int sign(const Rational& r) { return r.sign(); }

inline Rational abs(const Rational& r) { return r.sign() < 0 ? Rational(-r) : r; }

inline Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

}  // namespace hypersieve
