#pragma once

#include <string>
#include <string_view>

#include "hypersieve/polynomial.hpp"

namespace hypersieve {

/// Parses infix literals such as "(1+x)^3", "4x^2+4x+1", "1/8 + 2*x".
///
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := power (('*'|'/') power | power)*     juxtaposition multiplies
///   power   := primary ['^' digits]
///   primary := digits | 'x' | '(' expr ')'
///
/// Division is only by nonzero constants. Throws Error(ParseError).
RationalPoly parse_polynomial(std::string_view text);

/// Descending-power rendering accepted back by parse_polynomial, e.g.
/// "6x^2 + 3x + 1/8" or "1/4*x^2 - 1". The zero polynomial prints as "0".
std::string format_polynomial(const RationalPoly& f);

}  // namespace hypersieve
