#include "hypersieve/bases.hpp"

#include <utility>

namespace hypersieve {

SimpleSet::SimpleSet(std::string kind, std::vector<Rational> params, Generator generator)
    : kind_(std::move(kind)),
      params_(std::move(params)),
      generator_(std::make_shared<const Generator>(std::move(generator))),
      memo_(std::make_shared<Memo>()) {}

const RationalPoly& SimpleSet::operator()(std::size_t k) const {
  std::lock_guard<std::mutex> lock(memo_->mutex);
  auto& polys = memo_->polys;
  while (polys.size() <= k) {
    const std::size_t next = polys.size();
    RationalPoly q = (*generator_)(next, polys);
    if (q.degree() != Degree(next)) {
      throw Error(ErrorCode::DegreeMismatch,
                  name() + ": generated q_" + std::to_string(next) + " has the wrong degree");
    }
    polys.push_back(std::move(q));
  }
  return polys[k];
}

std::string SimpleSet::name() const {
  std::string out = kind_;
  for (std::size_t i = 0; i < params_.size(); ++i) {
    out += (i == 0 ? ":" : ",") + format_rational(params_[i]);
  }
  return out;
}

SimpleSet standard_basis() {
  return SimpleSet("standard", {}, [](std::size_t k, const auto&) { return RationalPoly::monomial(k); });
}

SimpleSet generalized_hermite_basis(const Rational& alpha) {
  if (alpha == 0) throw Error(ErrorCode::ZeroAlpha, "generalized Hermite basis needs alpha != 0");
  return SimpleSet("generalized_hermite", {alpha},
                   [alpha](std::size_t k, const std::deque<RationalPoly>& h) {
                     if (k < 2) return RationalPoly::monomial(k);
                     const long j = static_cast<long>(k - 1);
                     return RationalPoly::x() * h[k - 1] - h[k - 2] * (alpha * j);
                   });
}

namespace {

SimpleSet patched_standard(std::string kind, std::vector<RationalPoly> head) {
  return SimpleSet(std::move(kind), {},
                   [head = std::move(head)](std::size_t k, const auto&) {
                     return k < head.size() ? head[k] : RationalPoly::monomial(k);
                   });
}

}  // namespace

SimpleSet q1_basis() { return patched_standard("q1", {{1}, {0, 1}, {0, 1, 1}}); }

SimpleSet q2_basis() { return patched_standard("q2", {{1}, {1, 1}, {1, 1, 1}}); }

SimpleSet q3_basis() { return patched_standard("q3", {{1}, {0, 1}, {1, 0, 1}}); }

SimpleSet truncated_sum_basis(std::size_t j) {
  return SimpleSet("truncated_sum", {Rational(static_cast<long>(j))},
                   [j](std::size_t k, const auto&) {
                     if (k > j) return RationalPoly::monomial(k);
                     return RationalPoly(std::vector<Rational>(k + 1, Rational(1)));
                   });
}

SimpleSet laguerre_basis() {
  return SimpleSet("laguerre", {}, [](std::size_t k, const std::deque<RationalPoly>& l) {
    if (k == 0) return RationalPoly{1};
    if (k == 1) return RationalPoly{1, -1};
    const long n = static_cast<long>(k - 1);
    const RationalPoly factor{Rational(2 * n + 1), Rational(-1)};
    return (factor * l[k - 1] - l[k - 2] * Rational(n)) / Rational(n + 1);
  });
}

SimpleSet legendre_basis() {
  return SimpleSet("legendre", {}, [](std::size_t k, const std::deque<RationalPoly>& p) {
    if (k < 2) return RationalPoly::monomial(k);
    const long n = static_cast<long>(k - 1);
    return (RationalPoly::x() * p[k - 1] * Rational(2 * n + 1) - p[k - 2] * Rational(n)) /
           Rational(n + 1);
  });
}

SimpleSet custom_basis(std::vector<RationalPoly> polys) {
  for (std::size_t k = 0; k < polys.size(); ++k) {
    if (polys[k].degree() != Degree(k)) {
      throw Error(ErrorCode::DegreeMismatch,
                  "custom basis entry " + std::to_string(k) + " must have degree " + std::to_string(k));
    }
  }
  SimpleSet set = patched_standard("custom", polys);
  set.explicit_ = std::move(polys);
  return set;
}

SimpleSet affine_transform_basis(const SimpleSet& basis, ScaleSequence scales, const Rational& a,
                                 const Rational& b) {
  if (a == 0) throw Error(ErrorCode::ZeroScale, "affine transform needs a != 0");
  return SimpleSet("affine", {a, b},
                   [basis, scales = std::move(scales), a, b](std::size_t k, const auto&) {
                     const Rational c = scales(k);
                     if (c == 0) {
                       throw Error(ErrorCode::ZeroMultiplier,
                                   "affine transform multiplier c_" + std::to_string(k) + " is zero");
                     }
                     return compose_affine(basis(k), a, b) * c;
                   });
}

SimpleSet affine_transform_basis(const SimpleSet& basis, const Rational& scale, const Rational& a,
                                 const Rational& b) {
  if (scale == 0) throw Error(ErrorCode::ZeroMultiplier, "affine transform multiplier is zero");
  return affine_transform_basis(basis, [scale](std::size_t) { return scale; }, a, b);
}

}  // namespace hypersieve
