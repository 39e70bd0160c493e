#pragma once

#include <cstddef>
#include <string>

#include "hypersieve/bases.hpp"
#include "hypersieve/realroots.hpp"

namespace hypersieve {

/// Bracket [lo, hi] around max E_n, where E_n is the set of b for which
/// q_n + b q_{n-2} is real-rooted. lo is certified inside, hi outside.
struct EnBound {
  std::size_t n = 0;
  std::string basis;
  Rational lo;
  Rational hi;
  RealRootCertificate lo_certificate;
  RealRootCertificate hi_certificate;

  Rational width() const { return hi - lo; }
};

struct EnBoundOptions {
  Rational tol{1, 1024};
  /// Doubling cap for the upper end; exceeding it raises NoUpperBoundFound.
  Rational cap{Integer(1) << 40};
  /// Demand that q_n has n simple real zeros (raises NotSimpleRealRooted).
  bool require_simple = true;
};

/// q_n + b q_{n-2}.
RationalPoly en_member_candidate(const SimpleSet& basis, std::size_t n, const Rational& b);

bool in_en(const SimpleSet& basis, std::size_t n, const Rational& b);

/// Exact bisection from lo = 0 with hi doubled until it leaves E_n.
/// Throws InvalidArgument for n < 2 or tol <= 0, NotRealRooted if q_n itself
/// is not real-rooted (so 0 is not in E_n).
EnBound en_max_bound(const SimpleSet& basis, std::size_t n, const EnBoundOptions& options = {});

}  // namespace hypersieve
