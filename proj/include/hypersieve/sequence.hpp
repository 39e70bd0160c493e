#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "hypersieve/rational.hpp"

namespace hypersieve {

namespace tail {
struct Zeros {
  friend bool operator==(const Zeros&, const Zeros&) = default;
};
/// The last prefix value repeats.
struct Constant {
  friend bool operator==(const Constant&, const Constant&) = default;
};
/// gamma_{m+i} = gamma_m * ratio^i.
struct Geometric {
  Rational ratio;
  friend bool operator==(const Geometric&, const Geometric&) = default;
};
}  // namespace tail

using TailRule = std::variant<tail::Zeros, tail::Constant, tail::Geometric>;

/// gamma_0 .. gamma_m given explicitly, continued by a tail rule.
class GammaSequence {
public:
  /// Throws InvalidSequence for an empty prefix, or a geometric tail after a
  /// zero last term.
  GammaSequence(std::vector<Rational> prefix, TailRule tail = tail::Zeros{});

  static GammaSequence constant(const Rational& c) { return GammaSequence({c}, tail::Constant{}); }

  /// {gamma_0 * ratio^k}.
  static GammaSequence geometric(const Rational& gamma0, const Rational& ratio) {
    return GammaSequence({gamma0}, tail::Geometric{ratio});
  }

  const std::vector<Rational>& prefix() const noexcept { return prefix_; }
  const TailRule& tail() const noexcept { return tail_; }

  Rational operator[](std::size_t k) const { return at(k); }
  Rational at(std::size_t k) const;

  friend bool operator==(const GammaSequence&, const GammaSequence&) = default;

private:
  std::vector<Rational> prefix_;
  TailRule tail_;
};

inline Rational gamma_at(const GammaSequence& g, std::size_t k) { return g.at(k); }

/// {gamma_k^m}; throws InvalidArgument for m == 0.
GammaSequence power_sequence(const GammaSequence& g, unsigned m);

/// {r * gamma_k}.
GammaSequence scale_sequence(const GammaSequence& g, const Rational& r);

}  // namespace hypersieve
