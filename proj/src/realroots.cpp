#include "hypersieve/realroots.hpp"

#include <algorithm>

namespace hypersieve {

namespace {

// Sign of f at a finite point.
int sign_at_point(const RationalPoly& f, const Rational& x) { return f.evaluate(x).sign(); }

std::size_t variations_at(const std::vector<RationalPoly>& chain, const ExtendedRational& x) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sign_at(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Roots of a squarefree polynomial in (lo, hi] given its Sturm chain.
std::size_t chain_count(const std::vector<RationalPoly>& chain, const ExtendedRational& lo,
                        const ExtendedRational& hi) {
  const std::size_t vl = variations_at(chain, lo);
  const std::size_t vh = variations_at(chain, hi);
  return vl >= vh ? vl - vh : 0;
}

// Strict bound on the absolute value of every root.
Rational cauchy_bound(const RationalPoly& f) {
  const auto& c = f.coeffs();
  const Rational lead = abs(c.back());
  Rational m = 0;
  for (std::size_t i = 0; i + 1 < c.size(); ++i) m = std::max(m, abs(c[i]) / lead);
  return m + 1;
}

class Isolator {
public:
  Isolator(const RationalPoly& squarefree, const Rational& width)
      : s_(squarefree), chain_(sturm_chain(squarefree)), width_(width) {}

  std::vector<IsolatingInterval> run() {
    const Rational bound = cauchy_bound(s_);
    const Rational lo = -bound;
    recurse(lo, bound, count(lo, bound));
    separate_touching();
    return std::move(out_);
  }

private:
  std::size_t count(const Rational& lo, const Rational& hi) const { return chain_count(chain_, lo, hi); }

  bool is_root(const Rational& x) const { return sign_at_point(s_, x) == 0; }

  // [a, b] with a, b not roots and `roots` roots inside.
  void recurse(const Rational& a, const Rational& b, std::size_t roots) {
    if (roots == 0) return;
    if (roots == 1 && b - a < width_) {
      out_.push_back({a, b});
      return;
    }
    const Rational m = (a + b) / 2;
    if (!is_root(m)) {
      const std::size_t left = count(a, m);
      recurse(a, m, left);
      recurse(m, b, roots - left);
      return;
    }
    // m is an exact root; step off it on both sides until no other root
    // lies between the new endpoint and m.
    Rational step = std::min(m - a, b - m) / 2;
    while (is_root(m - step) || count(m - step, m) != 1) step /= 2;
    const Rational left_end = m - step;
    step = std::min(m - a, b - m) / 2;
    while (count(m, m + step) != 0) step /= 2;
    const Rational right_end = m + step;

    recurse(a, left_end, count(a, left_end));
    out_.push_back({m, m});
    recurse(right_end, b, count(right_end, b));
  }

  // Intervals produced by a plain split share the (non-root) split point;
  // shrink the left one until the closed intervals are disjoint.
  void separate_touching() {
    for (std::size_t i = 0; i + 1 < out_.size(); ++i) {
      while (!out_[i].exact() && out_[i].hi >= out_[i + 1].lo) {
        auto& iv = out_[i];
        const Rational mid = (iv.lo + iv.hi) / 2;
        if (is_root(mid)) {
          iv = {mid, mid};
        } else if (count(iv.lo, mid) == 1) {
          iv.hi = mid;
        } else {
          iv.lo = mid;
        }
      }
    }
  }

  RationalPoly s_;
  std::vector<RationalPoly> chain_;
  Rational width_;
  std::vector<IsolatingInterval> out_;
};

}  // namespace

std::vector<RationalPoly> sturm_chain(const RationalPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "Sturm chain of the zero polynomial");
  std::vector<RationalPoly> chain{f};
  if (*f.degree() == 0) return chain;
  chain.push_back(derivative(f));
  while (true) {
    RationalPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.is_zero()) break;
    r /= -abs(r.leading_coefficient());
    chain.push_back(std::move(r));
  }
  return chain;
}

int sign_at(const RationalPoly& f, const ExtendedRational& x) {
  if (f.is_zero()) return 0;
  if (x.is_finite()) return sign_at_point(f, x.value());
  const int lead = f.leading_coefficient().sign();
  if (x.kind() == ExtendedRational::Kind::PosInfinity) return lead;
  return (*f.degree() % 2 == 0) ? lead : -lead;
}

std::size_t sign_variations(const std::vector<RationalPoly>& chain, const ExtendedRational& x) {
  return variations_at(chain, x);
}

std::size_t count_real_roots(const RationalPoly& f, const ExtendedRational& lo,
                             const ExtendedRational& hi) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "counting roots of the zero polynomial");
  if (!(lo < hi)) throw Error(ErrorCode::BadInterval, "count_real_roots requires lo < hi");
  return chain_count(sturm_chain(squarefree_part(f)), lo, hi);
}

RealRootCertificate is_real_rooted(const RationalPoly& f) {
  RealRootCertificate cert;
  if (f.is_zero()) return cert;
  const std::size_t deg = *f.degree();
  if (deg <= 1) {
    cert.verdict = Verdict::AllRealRooted;
    cert.distinct_real_roots = deg;
    cert.squarefree_degree = deg;
    cert.sturm_chain_length = deg + 1;
    return cert;
  }
  const RationalPoly s = squarefree_part(f);
  const auto chain = sturm_chain(s);
  cert.squarefree_degree = *s.degree();
  cert.sturm_chain_length = chain.size();
  cert.distinct_real_roots =
      chain_count(chain, ExtendedRational::neg_infinity(), ExtendedRational::pos_infinity());
  cert.verdict = cert.distinct_real_roots == cert.squarefree_degree ? Verdict::AllRealRooted
                                                                    : Verdict::HasNonRealRoot;
  return cert;
}

std::vector<IsolatingInterval> isolate_real_roots(const RationalPoly& f, const Rational& width) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "isolating roots of the zero polynomial");
  if (width.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "isolation width must be positive");
  const RationalPoly s = squarefree_part(f);
  if (*s.degree() == 0) return {};
  if (*s.degree() == 1) {
    const Rational root = -s[0] / s[1];
    return {{root, root}};
  }
  return Isolator(s, width).run();
}

bool all_roots_nonpositive(const RationalPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "all_roots_nonpositive of zero");
  if (!is_real_rooted(f).real_rooted()) {
    throw Error(ErrorCode::NotRealRooted, "all_roots_nonpositive requires a real-rooted input");
  }
  return count_real_roots(f, Rational(0), ExtendedRational::pos_infinity()) == 0;
}

}  // namespace hypersieve
