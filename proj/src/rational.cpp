#include "hypersieve/rational.hpp"

#include <cctype>

#include "hypersieve/error.hpp"

namespace hypersieve {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroScale: return "ZeroScale";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::BadInterval: return "BadInterval";
    case ErrorCode::NotRealRooted: return "NotRealRooted";
    case ErrorCode::ZeroAlpha: return "ZeroAlpha";
    case ErrorCode::ZeroMultiplier: return "ZeroMultiplier";
    case ErrorCode::NonpositiveAlpha: return "NonpositiveAlpha";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::InvalidSequence: return "InvalidSequence";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroLeadingTerms: return "ZeroLeadingTerms";
    case ErrorCode::NegativeTerms: return "NegativeTerms";
    case ErrorCode::NotSimpleRealRooted: return "NotSimpleRealRooted";
    case ErrorCode::NoUpperBoundFound: return "NoUpperBoundFound";
    case ErrorCode::ScheduleTooShort: return "ScheduleTooShort";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num = body;
  std::string_view den = "1";
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  const Integer n{std::string(num)};
  const Integer d{std::string(den)};
  if (d == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(n, d);
  return negative ? Rational(-r) : r;
}

std::string format_rational(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace hypersieve
