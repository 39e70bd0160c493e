#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hypersieve/polynomial.hpp"

namespace hypersieve {

/// A simple set of polynomials: q_0, q_1, ... with deg q_k = k.
///
/// Generation is lazy and memoized. Copies share the memo, which is guarded
/// by a mutex, so a SimpleSet can be read from several threads at once.
/// Returned references stay valid for the lifetime of any copy.
class SimpleSet {
public:
  /// Produces q_k given q_0 .. q_{k-1}.
  using Generator = std::function<RationalPoly(std::size_t k, const std::deque<RationalPoly>& lower)>;

  SimpleSet(std::string kind, std::vector<Rational> params, Generator generator);

  /// q_k in the standard basis. Throws DegreeMismatch if the generator
  /// breaks deg q_k = k.
  const RationalPoly& operator()(std::size_t k) const;

  const Rational& leading_coefficient(std::size_t k) const { return (*this)(k).leading_coefficient(); }

  /// Short machine name, e.g. "generalized_hermite", "q2", "custom".
  const std::string& kind() const noexcept { return kind_; }
  const std::vector<Rational>& params() const noexcept { return params_; }

  /// Human-readable name, e.g. "generalized_hermite:-1/2".
  std::string name() const;

  /// Explicit polynomials of a "custom" set (empty for other kinds).
  const std::vector<RationalPoly>& explicit_polys() const noexcept { return explicit_; }

private:
  friend SimpleSet custom_basis(std::vector<RationalPoly> polys);

  struct Memo {
    std::mutex mutex;
    std::deque<RationalPoly> polys;
  };

  std::string kind_;
  std::vector<Rational> params_;
  std::vector<RationalPoly> explicit_;
  std::shared_ptr<const Generator> generator_;
  std::shared_ptr<Memo> memo_;
};

/// q_k = x^k.
SimpleSet standard_basis();

/// H_0 = 1, H_1 = x, H_{k+1} = x H_k - alpha k H_{k-1}. Throws ZeroAlpha.
SimpleSet generalized_hermite_basis(const Rational& alpha);

SimpleSet q1_basis();  ///< {1, x, x + x^2, x^3, x^4, ...}
SimpleSet q2_basis();  ///< {1, x + 1, x^2 + x + 1, x^3, ...}
SimpleSet q3_basis();  ///< {1, x, 1 + x^2, x^3, ...}

/// q_k = 1 + x + ... + x^k for k <= j, x^k afterwards.
SimpleSet truncated_sum_basis(std::size_t j);

/// L_0 = 1, L_1 = 1 - x, (k+1) L_{k+1} = (2k+1-x) L_k - k L_{k-1}.
SimpleSet laguerre_basis();

/// P_0 = 1, P_1 = x, (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}.
SimpleSet legendre_basis();

/// Explicit finite list (validated deg q_k = k), continued by x^k.
SimpleSet custom_basis(std::vector<RationalPoly> polys);

/// Multiplier sequence c_k used by affine_transform_basis.
using ScaleSequence = std::function<Rational(std::size_t)>;

/// q^_k(x) = c_k q_k(a x + b). Throws ZeroScale for a == 0 and
/// ZeroMultiplier (on generation) for any c_k == 0.
SimpleSet affine_transform_basis(const SimpleSet& basis, ScaleSequence scales, const Rational& a,
                                 const Rational& b);

SimpleSet affine_transform_basis(const SimpleSet& basis, const Rational& scale, const Rational& a,
                                 const Rational& b);

}  // namespace hypersieve
