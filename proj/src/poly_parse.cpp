#include "hypersieve/poly_parse.hpp"

#include <cctype>

namespace hypersieve {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  RationalPoly parse() {
    RationalPoly result = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError,
                why + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool starts_primary() {
    const char c = peek();
    return c == 'x' || c == '(' || std::isdigit(static_cast<unsigned char>(c));
  }

  RationalPoly expr() {
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    RationalPoly acc = term();
    if (negate) acc = -acc;
    while (true) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  RationalPoly term() {
    RationalPoly acc = power();
    while (true) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        const RationalPoly divisor = power();
        if (divisor.is_zero()) fail("division by zero");
        if (*divisor.degree() != 0) fail("division by a non-constant");
        acc /= divisor[0];
      } else if (starts_primary()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  RationalPoly power() {
    RationalPoly base = primary();
    if (!accept('^')) return base;
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an exponent");
    const std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 4) fail("exponent too large");
    return pow(base, static_cast<unsigned>(std::stoul(digits)));
  }

  RationalPoly primary() {
    const char c = peek();
    if (c == 'x') {
      ++pos_;
      return RationalPoly::x();
    }
    if (c == '(') {
      ++pos_;
      RationalPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return RationalPoly::constant(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalPoly parse_polynomial(std::string_view text) { return Parser(text).parse(); }

std::string format_polynomial(const RationalPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  const auto& c = f.coeffs();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    const bool negative = c[k].sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = abs(c[k]);
    if (k == 0) {
      out += format_rational(magnitude);
      continue;
    }
    if (magnitude != 1) {
      out += format_rational(magnitude);
      if (boost::multiprecision::denominator(magnitude) != 1) out += "*";
    }
    out += "x";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace hypersieve
