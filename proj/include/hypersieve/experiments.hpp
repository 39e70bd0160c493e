#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hypersieve/basischange.hpp"
#include "hypersieve/en_bound.hpp"
#include "hypersieve/sequence.hpp"

namespace hypersieve {

/// Expansion of f in the alpha-deformed basis for one alpha.
struct DeformedRecord {
  Rational alpha;
  std::vector<Rational> coefficients;    ///< c_{alpha,k}
  std::vector<RationalPoly> deformed;    ///< p_k^alpha, k = 0..deg f
};

struct ConvergenceTrace {
  RationalPoly f;
  std::string from;
  std::string to;
  std::vector<Rational> limit_coefficients;  ///< m_k, f expanded in the target basis
  std::vector<RationalPoly> target_polys;    ///< b_k, k = 0..deg f
  std::vector<DeformedRecord> records;       ///< one per schedule entry

  std::vector<Rational> schedule() const;
};

/// Expands f in alpha_deformed_basis(from, to, alpha) for every alpha of the
/// schedule. The schedule must be strictly increasing with every entry > 1
/// (InvalidArgument otherwise). The leading coefficient equals m_n exactly.
ConvergenceTrace deformed_expansion_trace(const RationalPoly& f, const SimpleSet& from,
                                          const SimpleSet& to, const std::vector<Rational>& schedule);

/// 21 evenly spaced points on [-2, 2].
std::vector<Rational> default_grid();

/// Gap ratios between consecutive schedule entries alpha < alpha'. A ratio is
/// gap(alpha) / gap(alpha'); zero-over-zero counts as converged.
struct DecayStep {
  Rational alpha;
  Rational next_alpha;
  Rational required_factor;      ///< alpha' / (2 alpha), i.e. 5 per decade
  Rational basis_gap;            ///< max_{k, x} |p_k^alpha(x) - b_k(x)|
  Rational next_basis_gap;
  std::vector<Rational> coefficient_gaps;       ///< |c_{alpha,k} - m_k|, k < n
  std::vector<Rational> next_coefficient_gaps;
  Rational image_gap;            ///< max_x |f_alpha(x) - sum m_k gamma_k b_k(x)|
  Rational next_image_gap;
  bool basis_ok = false;
  bool coefficients_ok = false;
  bool image_ok = false;
};

struct ConvergenceReport {
  bool leading_coefficient_exact = false;  ///< c_{alpha,n} == m_n for every alpha
  std::vector<DecayStep> steps;

  bool passed() const;
};

/// Checks, on a finite grid, the O(1/alpha) decay of the deformed basis, its
/// coefficients, and the transformed polynomial f_alpha. Throws
/// ScheduleTooShort for fewer than two schedule entries and InvalidArgument
/// for an empty grid.
ConvergenceReport claim_convergence_check(const ConvergenceTrace& trace,
                                          const std::vector<Rational>& grid, const GammaSequence& g);

}  // namespace hypersieve
