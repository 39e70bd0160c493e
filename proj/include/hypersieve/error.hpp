#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypersieve {

enum class ErrorCode {
  ZeroScale,
  BothZero,
  ZeroPolynomial,
  BadInterval,
  NotRealRooted,
  ZeroAlpha,
  ZeroMultiplier,
  NonpositiveAlpha,
  DegreeMismatch,
  InvalidSequence,
  InvalidArgument,
  ZeroLeadingTerms,
  NegativeTerms,
  NotSimpleRealRooted,
  NoUpperBoundFound,
  ScheduleTooShort,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every precondition failure in the library surfaces as this exception.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace hypersieve
