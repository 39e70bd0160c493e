#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hypersieve/bases.hpp"
#include "hypersieve/realroots.hpp"
#include "hypersieve/sequence.hpp"

namespace hypersieve {

/// Expand f in the basis, multiply coefficient k by gamma_k, and rebuild in
/// the standard basis.
RationalPoly apply_sequence(const GammaSequence& g, const RationalPoly& f, const SimpleSet& basis);

/// sum_k gamma_k C(n,k) x^k, the image of (1+x)^n in the standard basis.
RationalPoly binomial_image(const GammaSequence& g, std::size_t n);

struct PolyaSchurFailure {
  std::size_t n = 0;
  RealRootCertificate certificate;
  RationalPoly image;
};

struct PolyaSchurResult {
  std::size_t degree_bound = 0;
  std::optional<PolyaSchurFailure> failure;

  bool passed() const noexcept { return !failure.has_value(); }
};

/// Certifies binomial_image(g, n) real-rooted for n = 1..degree_bound and
/// stops at the first failure. An identically zero image counts as passing.
/// A pass is evidence up to the bound, not a proof.
PolyaSchurResult polya_schur_check(const GammaSequence& g, std::size_t degree_bound);

/// Pass/FailAt(k) outcome of an index-wise check.
struct IndexCheck {
  std::optional<std::size_t> fail_at;

  bool passed() const noexcept { return !fail_at.has_value(); }
  static IndexCheck pass() { return {}; }
  static IndexCheck fail(std::size_t k) { return {k}; }
};

/// gamma_k^2 - gamma_{k-1} gamma_{k+1} >= 0 for k = 1..bound.
IndexCheck turan_check(const GammaSequence& g, std::size_t bound);

struct SignPattern {
  enum class Kind { AllSameSign, Alternating, Neither };
  Kind kind = Kind::AllSameSign;
  std::size_t violation = 0;  ///< first index where both patterns are broken (Neither only)
};

/// Sign pattern of the nonzero terms among gamma_0..gamma_bound. Zeros are
/// neutral; a pattern that is both same-sign and alternating reports
/// AllSameSign.
SignPattern sign_pattern_check(const GammaSequence& g, std::size_t bound);

/// Once a zero follows a nonzero term, every later term up to the bound must
/// vanish. Reports the first nonzero term that breaks this.
IndexCheck zero_pattern_check(const GammaSequence& g, std::size_t bound);

struct Extrapolation {
  Rational alpha;
  Rational gamma0;
  /// Prefix indices k with gamma_k != gamma_0 alpha^k, followed by the first
  /// tail index when the tail rule disagrees with the progression.
  std::vector<std::size_t> violations;

  Rational predicted(std::size_t n) const { return gamma0 * pow(alpha, static_cast<unsigned>(n)); }
  bool consistent() const noexcept { return violations.empty(); }
};

/// nullopt when gamma_1/gamma_0 != gamma_2/gamma_1 (not a geometric start).
/// Throws ZeroLeadingTerms when gamma_0 or gamma_1 vanishes. Any violation
/// shows the sequence is not a classical multiplier sequence.
std::optional<Extrapolation> geometric_extrapolation(const GammaSequence& g);

/// gamma_{k+1} <= gamma_k for 1 <= k < bound. Throws NegativeTerms if any of
/// gamma_0..gamma_bound is negative. FailAt reports k+1.
IndexCheck monotone_after_first_check(const GammaSequence& g, std::size_t bound);

/// gamma_{k+1} >= gamma_k for 0 <= k < bound. Throws NegativeTerms as above.
IndexCheck nondecreasing_check(const GammaSequence& g, std::size_t bound);

/// Given f whose image under g^m is not real-rooted, applies g repeatedly and
/// returns the last real-rooted iterate: a counterexample for g itself.
/// Returns nullopt if f is not real-rooted or g^m does not falsify it.
std::optional<RationalPoly> lift_power_counterexample(const GammaSequence& g, unsigned m,
                                                      const RationalPoly& f, const SimpleSet& basis);

}  // namespace hypersieve
