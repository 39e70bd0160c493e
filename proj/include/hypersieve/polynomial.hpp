#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "hypersieve/error.hpp"
#include "hypersieve/rational.hpp"

namespace hypersieve {

/// Degree of a polynomial; std::nullopt stands for the degree of the zero
/// polynomial (minus infinity), which never takes part in integer arithmetic.
using Degree = std::optional<std::size_t>;

/// Dense univariate polynomial, coefficients indexed by power (constant term
/// first). The stored vector never has a trailing zero, so the zero
/// polynomial is the empty vector.
template <typename Scalar>
class Polynomial {
public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { normalize(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }

  static Polynomial monomial(std::size_t power, const Scalar& c = Scalar(1)) {
    std::vector<Scalar> v(power + 1, Scalar(0));
    v[power] = c;
    return Polynomial(std::move(v));
  }

  static Polynomial x() { return monomial(1); }

  const std::vector<Scalar>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  Degree degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
  }

  /// Coefficient of x^power; zero past the degree.
  Scalar operator[](std::size_t power) const {
    return power < coeffs_.size() ? coeffs_[power] : Scalar(0);
  }

  /// Throws ZeroPolynomial on the zero polynomial.
  const Scalar& leading_coefficient() const {
    if (coeffs_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero");
    return coeffs_.back();
  }

  template <typename Arg>
  Arg evaluate(const Arg& at) const {
    Arg acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + Arg(*it);
    return acc;
  }

  Polynomial operator-() const {
    std::vector<Scalar> v = coeffs_;
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    normalize();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Scalar(0));
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    normalize();
    return *this;
  }

  Polynomial& operator*=(const Scalar& s) {
    if (s == Scalar(0)) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  Polynomial& operator/=(const Scalar& s) {
    if (s == Scalar(0)) throw Error(ErrorCode::InvalidArgument, "division of polynomial by zero");
    for (auto& c : coeffs_) c /= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(Polynomial lhs, const Scalar& s) { return lhs *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial rhs) { return rhs *= s; }
  friend Polynomial operator/(Polynomial lhs, const Scalar& s) { return lhs /= s; }

  friend Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Scalar> v(f.coeffs_.size() + g.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
      if (f.coeffs_[i] == Scalar(0)) continue;
      for (std::size_t j = 0; j < g.coeffs_.size(); ++j) v[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }

  Polynomial& operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == Scalar(0)) coeffs_.pop_back();
  }

  std::vector<Scalar> coeffs_;
};

using RationalPoly = Polynomial<Rational>;

template <typename Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& base, unsigned exponent) {
  Polynomial<Scalar> result = Polynomial<Scalar>::constant(Scalar(1));
  Polynomial<Scalar> b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

template <typename Scalar>
Polynomial<Scalar> derivative(const Polynomial<Scalar>& f) {
  const auto& c = f.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Scalar> v(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) v[i - 1] = c[i] * Scalar(static_cast<long>(i));
  return Polynomial<Scalar>(std::move(v));
}

/// f(a*x + b). Throws ZeroScale when a == 0.
template <typename Scalar>
Polynomial<Scalar> compose_affine(const Polynomial<Scalar>& f, const Scalar& a, const Scalar& b) {
  if (a == Scalar(0)) throw Error(ErrorCode::ZeroScale, "compose_affine requires a != 0");
  const Polynomial<Scalar> inner({b, a});
  Polynomial<Scalar> acc;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = acc * inner + Polynomial<Scalar>::constant(*it);
  }
  return acc;
}

/// Euclidean division over a field: num = quotient * den + remainder,
/// deg remainder < deg den.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& num,
                                                         const Polynomial<Scalar>& den) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  std::vector<Scalar> rem = num.coeffs();
  const auto& d = den.coeffs();
  const std::size_t dn = d.size() - 1;
  if (rem.size() < d.size()) return {Polynomial<Scalar>(), num};
  std::vector<Scalar> quot(rem.size() - dn, Scalar(0));
  const Scalar& lead = d.back();
  for (std::size_t i = rem.size(); i-- > dn;) {
    if (rem[i] == Scalar(0)) continue;
    const Scalar factor = rem[i] / lead;
    quot[i - dn] = factor;
    for (std::size_t j = 0; j <= dn; ++j) rem[i - dn + j] -= factor * d[j];
  }
  rem.resize(dn);
  return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

template <typename Scalar>
Polynomial<Scalar> remainder(const Polynomial<Scalar>& num, const Polynomial<Scalar>& den) {
  return divmod(num, den).second;
}

template <typename Scalar>
Polynomial<Scalar> monic(const Polynomial<Scalar>& f) {
  if (f.is_zero()) return f;
  return f / f.leading_coefficient();
}

/// Monic greatest common divisor. Throws BothZero when f = g = 0.
template <typename Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> f, Polynomial<Scalar> g) {
  if (f.is_zero() && g.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  while (!g.is_zero()) {
    Polynomial<Scalar> r = remainder(f, g);
    f = std::move(g);
    // Keeping the remainders monic bounds coefficient growth.
    g = monic(r);
  }
  return monic(f);
}

/// f / gcd(f, f'): same distinct roots as f, all simple. Nonzero input only.
template <typename Scalar>
Polynomial<Scalar> squarefree_part(const Polynomial<Scalar>& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree part of zero");
  if (*f.degree() == 0) return f;
  return divmod(f, gcd(f, derivative(f))).first;
}

}  // namespace hypersieve
