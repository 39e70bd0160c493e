#include "hypersieve/basischange.hpp"

namespace hypersieve {

namespace {

Eigen::Index idx(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

RationalMatrix coefficient_matrix(const SimpleSet& basis, std::size_t order) {
  const Eigen::Index n = idx(order + 1);
  RationalMatrix m = RationalMatrix::Zero(n, n);
  for (std::size_t k = 0; k <= order; ++k) {
    const auto& c = basis(k).coeffs();
    for (std::size_t j = 0; j < c.size(); ++j) m(idx(k), idx(j)) = c[j];
  }
  return m;
}

RationalVector coefficient_vector(const RationalPoly& f, std::size_t size) {
  RationalVector v = RationalVector::Zero(idx(size));
  const auto& c = f.coeffs();
  for (std::size_t j = 0; j < c.size() && j < size; ++j) v(idx(j)) = c[j];
  return v;
}

ExpansionMatrix expansion_matrix(const SimpleSet& from, const SimpleSet& to, std::size_t order) {
  // from = A * to on coefficient rows; solve to^T A^T = from^T, where to^T is
  // upper triangular.
  const RationalMatrix source = coefficient_matrix(from, order);
  const RationalMatrix target = coefficient_matrix(to, order);
  RationalMatrix a = target.transpose()
                         .triangularView<Eigen::Upper>()
                         .solve(source.transpose())
                         .transpose();
  return {std::move(a), from.name(), to.name(), order};
}

std::vector<Rational> expand_in_basis(const RationalPoly& f, const SimpleSet& basis) {
  if (f.is_zero()) return {};
  const std::size_t n = *f.degree();
  const RationalMatrix q = coefficient_matrix(basis, n);
  const RationalVector c =
      q.transpose().triangularView<Eigen::Upper>().solve(coefficient_vector(f, n + 1));
  return {c.data(), c.data() + c.size()};
}

RationalPoly reconstruct(const std::vector<Rational>& coeffs, const SimpleSet& basis) {
  RationalPoly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) out += basis(k) * coeffs[k];
  }
  return out;
}

SimpleSet alpha_deformed_basis(const SimpleSet& from, const SimpleSet& to, const Rational& alpha,
                               std::size_t order) {
  if (alpha.sign() <= 0) {
    throw Error(ErrorCode::NonpositiveAlpha, "alpha-deformed basis needs alpha > 0");
  }
  SimpleSet deformed("alpha_deformed", {alpha}, [from, to, alpha](std::size_t k, const auto&) {
    const std::vector<Rational> row = expand_in_basis(from(k), to);
    const Rational& diagonal = row[k];
    RationalPoly p;
    Rational scale = diagonal;  // a(k,k) * alpha^(k-j), built from j = k downwards
    for (std::size_t j = k + 1; j-- > 0;) {
      if (row[j] != 0) p += to(j) * (row[j] / scale);
      scale *= alpha;
    }
    return p;
  });
  deformed(order);
  return deformed;
}

}  // namespace hypersieve
