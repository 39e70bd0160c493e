#pragma once

#include <cstddef>
#include <vector>

#include "hypersieve/polynomial.hpp"

namespace hypersieve {

enum class Verdict { AllRealRooted, HasNonRealRoot, DegenerateZeroPoly };

/// Outcome of a Sturm-chain real-rootedness decision.
///
/// verdict == AllRealRooted exactly when every distinct root of the
/// squarefree part is real, i.e. distinct_real_roots == squarefree_degree.
struct RealRootCertificate {
  Verdict verdict = Verdict::DegenerateZeroPoly;
  std::size_t distinct_real_roots = 0;
  std::size_t squarefree_degree = 0;
  std::size_t sturm_chain_length = 0;

  bool real_rooted() const noexcept { return verdict == Verdict::AllRealRooted; }

  friend bool operator==(const RealRootCertificate&, const RealRootCertificate&) = default;
};

/// A rational number or one of the two infinities.
class ExtendedRational {
public:
  enum class Kind { NegInfinity, Finite, PosInfinity };

  ExtendedRational(const Rational& value) : kind_(Kind::Finite), value_(value) {}  // NOLINT
  ExtendedRational(int value) : kind_(Kind::Finite), value_(value) {}  // NOLINT

  static ExtendedRational neg_infinity() { return ExtendedRational(Kind::NegInfinity); }
  static ExtendedRational pos_infinity() { return ExtendedRational(Kind::PosInfinity); }

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  const Rational& value() const noexcept { return value_; }

  friend bool operator<(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
    return a.is_finite() && a.value_ < b.value_;
  }

private:
  explicit ExtendedRational(Kind kind) : kind_(kind) {}

  Kind kind_;
  Rational value_;
};

/// Closed rational interval holding exactly one distinct real root;
/// lo == hi means the root is the rational lo itself.
struct IsolatingInterval {
  Rational lo;
  Rational hi;

  bool exact() const { return lo == hi; }
  friend bool operator==(const IsolatingInterval&, const IsolatingInterval&) = default;
};

/// f, f', -rem(f, f'), ... down to the last nonzero remainder (a constant
/// multiple of gcd(f, f')). Remainders past f' are rescaled by positive
/// constants, which leaves every sign pattern unchanged.
std::vector<RationalPoly> sturm_chain(const RationalPoly& f);

/// Sign of f at x, where x may be infinite (read off the leading term).
int sign_at(const RationalPoly& f, const ExtendedRational& x);

/// Number of sign changes (zeros skipped) of the chain evaluated at x.
std::size_t sign_variations(const std::vector<RationalPoly>& chain, const ExtendedRational& x);

/// Distinct real roots of f in the half-open interval (lo, hi].
std::size_t count_real_roots(const RationalPoly& f, const ExtendedRational& lo,
                             const ExtendedRational& hi);

RealRootCertificate is_real_rooted(const RationalPoly& f);

inline const Rational& default_isolation_width() {
  static const Rational width(1, 1024);
  return width;
}

/// Disjoint isolating intervals in increasing order, each narrower than
/// `width` (exact points have width zero).
std::vector<IsolatingInterval> isolate_real_roots(const RationalPoly& f,
                                                  const Rational& width = default_isolation_width());

/// True iff f (which must be real-rooted) has no positive root.
bool all_roots_nonpositive(const RationalPoly& f);

}  // namespace hypersieve
