#include "hypersieve/mstest.hpp"

#include "hypersieve/basischange.hpp"

namespace hypersieve {

RationalPoly apply_sequence(const GammaSequence& g, const RationalPoly& f, const SimpleSet& basis) {
  std::vector<Rational> coeffs = expand_in_basis(f, basis);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) coeffs[k] *= g.at(k);
  }
  return reconstruct(coeffs, basis);
}

RationalPoly binomial_image(const GammaSequence& g, std::size_t n) {
  std::vector<Rational> c(n + 1);
  Integer binom = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    c[k] = g.at(k) * Rational(binom);
    binom = binom * static_cast<long>(n - k) / static_cast<long>(k + 1);
  }
  return RationalPoly(std::move(c));
}

PolyaSchurResult polya_schur_check(const GammaSequence& g, std::size_t degree_bound) {
  if (degree_bound == 0) throw Error(ErrorCode::InvalidArgument, "polya_schur_check needs N >= 1");
  PolyaSchurResult result{degree_bound, std::nullopt};
  for (std::size_t n = 1; n <= degree_bound; ++n) {
    RationalPoly image = binomial_image(g, n);
    const RealRootCertificate cert = is_real_rooted(image);
    if (cert.verdict == Verdict::HasNonRealRoot) {
      result.failure = PolyaSchurFailure{n, cert, std::move(image)};
      break;
    }
  }
  return result;
}

IndexCheck turan_check(const GammaSequence& g, std::size_t bound) {
  for (std::size_t k = 1; k <= bound; ++k) {
    const Rational mid = g.at(k);
    if (mid * mid - g.at(k - 1) * g.at(k + 1) < 0) return IndexCheck::fail(k);
  }
  return IndexCheck::pass();
}

SignPattern sign_pattern_check(const GammaSequence& g, std::size_t bound) {
  int first_sign = 0;
  std::size_t first_index = 0;
  bool same = true;
  bool alternating = true;
  for (std::size_t k = 0; k <= bound; ++k) {
    const int s = g.at(k).sign();
    if (s == 0) continue;
    if (first_sign == 0) {
      first_sign = s;
      first_index = k;
      continue;
    }
    const int parity = ((k - first_index) % 2 == 0) ? 1 : -1;
    same = same && s == first_sign;
    alternating = alternating && s == first_sign * parity;
    if (!same && !alternating) return {SignPattern::Kind::Neither, k};
  }
  return {same ? SignPattern::Kind::AllSameSign : SignPattern::Kind::Alternating, 0};
}

IndexCheck zero_pattern_check(const GammaSequence& g, std::size_t bound) {
  bool seen_nonzero = false;
  bool zero_after_nonzero = false;
  for (std::size_t k = 0; k <= bound; ++k) {
    const bool zero = g.at(k) == 0;
    if (!zero && zero_after_nonzero) return IndexCheck::fail(k);
    if (zero && seen_nonzero) zero_after_nonzero = true;
    if (!zero) seen_nonzero = true;
  }
  return IndexCheck::pass();
}

std::optional<Extrapolation> geometric_extrapolation(const GammaSequence& g) {
  const Rational g0 = g.at(0);
  const Rational g1 = g.at(1);
  if (g0 == 0 || g1 == 0) {
    throw Error(ErrorCode::ZeroLeadingTerms, "geometric extrapolation needs gamma_0, gamma_1 != 0");
  }
  Extrapolation ex{g1 / g0, g0, {}};
  if (g.at(2) != ex.alpha * g1) return std::nullopt;

  const std::size_t m = g.prefix().size() - 1;
  for (std::size_t k = 0; k <= m; ++k) {
    if (g.at(k) != ex.predicted(k)) ex.violations.push_back(k);
  }
  // Two consecutive agreements pin down any tail rule completely.
  const std::size_t t = m + 1;
  if (g.at(t) != ex.predicted(t) || g.at(t + 1) != ex.predicted(t + 1)) ex.violations.push_back(t);
  return ex;
}

namespace {

void require_nonnegative(const GammaSequence& g, std::size_t bound) {
  for (std::size_t k = 0; k <= bound; ++k) {
    if (g.at(k).sign() < 0) {
      throw Error(ErrorCode::NegativeTerms, "monotonicity checks need nonnegative terms (gamma_" +
                                                std::to_string(k) + " < 0)");
    }
  }
}

}  // namespace

IndexCheck monotone_after_first_check(const GammaSequence& g, std::size_t bound) {
  require_nonnegative(g, bound);
  for (std::size_t k = 1; k < bound; ++k) {
    if (g.at(k + 1) > g.at(k)) return IndexCheck::fail(k + 1);
  }
  return IndexCheck::pass();
}

IndexCheck nondecreasing_check(const GammaSequence& g, std::size_t bound) {
  require_nonnegative(g, bound);
  for (std::size_t k = 0; k < bound; ++k) {
    if (g.at(k + 1) < g.at(k)) return IndexCheck::fail(k + 1);
  }
  return IndexCheck::pass();
}

std::optional<RationalPoly> lift_power_counterexample(const GammaSequence& g, unsigned m,
                                                      const RationalPoly& f, const SimpleSet& basis) {
  if (!is_real_rooted(f).real_rooted()) return std::nullopt;
  RationalPoly current = f;
  for (unsigned i = 0; i < m; ++i) {
    RationalPoly next = apply_sequence(g, current, basis);
    if (is_real_rooted(next).verdict == Verdict::HasNonRealRoot) return current;
    current = std::move(next);
  }
  return std::nullopt;
}

}  // namespace hypersieve
