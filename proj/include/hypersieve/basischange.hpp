#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include "hypersieve/bases.hpp"

namespace hypersieve {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Coefficients a(k, j), j <= k <= order, with q_k = sum_j a(k, j) b_j.
/// The matrix is lower triangular and its diagonal is nonzero.
struct ExpansionMatrix {
  RationalMatrix entries;
  std::string source;
  std::string target;
  std::size_t order = 0;

  const Rational& operator()(std::size_t k, std::size_t j) const {
    return entries(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
  }
};

/// Row k holds the standard-basis coefficients of q_k, k = 0..order.
RationalMatrix coefficient_matrix(const SimpleSet& basis, std::size_t order);

/// Standard-basis coefficients of f padded to length `size`.
RationalVector coefficient_vector(const RationalPoly& f, std::size_t size);

ExpansionMatrix expansion_matrix(const SimpleSet& from, const SimpleSet& to, std::size_t order);

/// c_0 .. c_n with f = sum c_k q_k, n = deg f; empty for f = 0.
std::vector<Rational> expand_in_basis(const RationalPoly& f, const SimpleSet& basis);

/// sum c_k q_k in the standard basis.
RationalPoly reconstruct(const std::vector<Rational>& coeffs, const SimpleSet& basis);

/// The set p_k = sum_{j<=k} a(k,j) b_j / (a(k,k) alpha^(k-j)), where a expands
/// `from` in `to`. Degrees up to `order` are generated eagerly; higher
/// degrees are produced on demand from the same rule.
/// Throws NonpositiveAlpha for alpha <= 0.
SimpleSet alpha_deformed_basis(const SimpleSet& from, const SimpleSet& to, const Rational& alpha,
                               std::size_t order);

}  // namespace hypersieve
