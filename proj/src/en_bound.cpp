#include "hypersieve/en_bound.hpp"

namespace hypersieve {

RationalPoly en_member_candidate(const SimpleSet& basis, std::size_t n, const Rational& b) {
  return basis(n) + basis(n - 2) * b;
}

bool in_en(const SimpleSet& basis, std::size_t n, const Rational& b) {
  return is_real_rooted(en_member_candidate(basis, n, b)).real_rooted();
}

EnBound en_max_bound(const SimpleSet& basis, std::size_t n, const EnBoundOptions& options) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "E_n is defined for n >= 2");
  if (options.tol.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "tol must be positive");

  const RealRootCertificate head = is_real_rooted(basis(n));
  if (options.require_simple && !(head.real_rooted() && head.squarefree_degree == n)) {
    throw Error(ErrorCode::NotSimpleRealRooted,
                basis.name() + ": q_" + std::to_string(n) + " lacks n simple real zeros");
  }
  if (!head.real_rooted()) {
    throw Error(ErrorCode::NotRealRooted, basis.name() + ": q_" + std::to_string(n) + " is not real-rooted");
  }

  Rational lo = 0;
  Rational hi = 1;
  while (in_en(basis, n, hi)) {
    lo = hi;
    hi *= 2;
    if (hi > options.cap) {
      throw Error(ErrorCode::NoUpperBoundFound,
                  basis.name() + ": E_" + std::to_string(n) + " not bounded below the doubling cap");
    }
  }
  while (hi - lo > options.tol) {
    const Rational mid = (lo + hi) / 2;
    if (in_en(basis, n, mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }

  EnBound bound{n, basis.name(), lo, hi, {}, {}};
  bound.lo_certificate = is_real_rooted(en_member_candidate(basis, n, lo));
  bound.hi_certificate = is_real_rooted(en_member_candidate(basis, n, hi));
  return bound;
}

}  // namespace hypersieve
