#include "doctest.h"

#include <random>
#include <set>

#include "hypersieve/basischange.hpp"
#include "hypersieve/falsify.hpp"
#include "hypersieve/mstest.hpp"

using namespace hypersieve;

namespace {

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational(long bound = 9) {
    return Rational(integer(-bound, bound), integer(1, 6));
  }

  Rational nonzero(long bound = 9) {
    Rational r = rational(bound);
    while (r == 0) r = rational(bound);
    return r;
  }

  RationalPoly poly(std::size_t max_degree) {
    const std::size_t n = static_cast<std::size_t>(integer(0, static_cast<long>(max_degree)));
    std::vector<Rational> c(n + 1);
    for (auto& v : c) v = rational();
    c[n] = nonzero();
    return RationalPoly(std::move(c));
  }

  SimpleSet basis() {
    switch (integer(0, 8)) {
      case 0: return standard_basis();
      case 1: return q1_basis();
      case 2: return q2_basis();
      case 3: return q3_basis();
      case 4: return laguerre_basis();
      case 5: return legendre_basis();
      case 6: return generalized_hermite_basis(nonzero(4));
      case 7: return truncated_sum_basis(static_cast<std::size_t>(integer(0, 5)));
      default: {
        std::vector<RationalPoly> polys;
        for (std::size_t k = 0; k < 6; ++k) {
          std::vector<Rational> c(k + 1);
          for (auto& v : c) v = rational(3);
          c[k] = nonzero(3);
          polys.emplace_back(std::move(c));
        }
        return affine_transform_basis(custom_basis(std::move(polys)), nonzero(3), nonzero(3), rational(3));
      }
    }
  }

  GammaSequence sequence() {
    std::vector<Rational> prefix(static_cast<std::size_t>(integer(1, 5)));
    for (auto& v : prefix) v = rational(5);
    switch (integer(0, 2)) {
      case 0: return GammaSequence(std::move(prefix), tail::Zeros{});
      case 1: return GammaSequence(std::move(prefix), tail::Constant{});
      default:
        prefix.back() = nonzero(5);
        return GammaSequence(std::move(prefix), tail::Geometric{nonzero(3)});
    }
  }

private:
  std::mt19937_64 rng_;
};

Integer binomial(std::size_t n, std::size_t k) {
  Integer r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("ring laws") {
  Gen gen(1);
  for (int i = 0; i < 300; ++i) {
    const RationalPoly a = gen.poly(6), b = gen.poly(6), c = gen.poly(6);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * RationalPoly::constant(1) == a);
    if (!b.is_zero()) {
      const auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK((r.is_zero() || *r.degree() < *b.degree()));
      const RationalPoly g = gcd(a * c, b * c);
      if (!c.is_zero()) CHECK(remainder(a * c, g).is_zero());
    }
    const Rational s = gen.nonzero(), t = gen.rational();
    const Rational x = gen.rational();
    CHECK(compose_affine(a, s, t).evaluate(x) == a.evaluate(s * x + t));
  }
}

TEST_CASE("expansion round trip on 1000 random pairs") {
  Gen gen(2);
  for (int i = 0; i < 1000; ++i) {
    const SimpleSet basis = gen.basis();
    const RationalPoly f = gen.poly(8);
    const auto coeffs = expand_in_basis(f, basis);
    CHECK(coeffs.size() == (f.is_zero() ? 0 : *f.degree() + 1));
    CHECK(reconstruct(coeffs, basis) == f);
  }
}

TEST_CASE("matrix identities") {
  Gen gen(3);
  for (int i = 0; i < 40; ++i) {
    const SimpleSet q = gen.basis(), b = gen.basis(), r = gen.basis();
    const std::size_t n = static_cast<std::size_t>(gen.integer(0, 6));
    const auto qb = expansion_matrix(q, b, n);
    CHECK((qb.entries * expansion_matrix(b, q, n).entries).eval() ==
          RationalMatrix::Identity(static_cast<Eigen::Index>(n + 1), static_cast<Eigen::Index>(n + 1)));
    CHECK((qb.entries * expansion_matrix(b, r, n).entries).eval() == expansion_matrix(q, r, n).entries);
  }
  for (int i = 0; i < 20; ++i) {
    const Rational alpha = gen.nonzero(4);
    const SimpleSet h = generalized_hermite_basis(alpha);
    CHECK(h(2) + h(0) * alpha == RationalPoly::monomial(2));
  }
}

TEST_CASE("Sturm counts against 1000 constructed polynomials") {
  Gen gen(4);
  for (int i = 0; i < 1000; ++i) {
    RationalPoly f = RationalPoly::constant(gen.nonzero());
    std::set<Rational> roots;
    const long real_factors = gen.integer(0, 5);
    for (long j = 0; j < real_factors; ++j) {
      const Rational r = gen.rational(4);
      roots.insert(r);
      f *= pow(RationalPoly({-r, 1}), static_cast<unsigned>(gen.integer(1, 3)));
    }
    const bool complex_pair = gen.integer(0, 2) == 0;
    if (complex_pair) {
      const Rational a = gen.rational(3), b = gen.nonzero(3);
      f *= RationalPoly({a * a + b * b, -2 * a, 1});
    }
    const auto cert = is_real_rooted(f);
    CHECK(cert.distinct_real_roots == roots.size());
    CHECK(cert.squarefree_degree == roots.size() + (complex_pair ? 2 : 0));
    CHECK(cert.real_rooted() == !complex_pair);

    // Interval counts: roots in (lo, hi] for a random cut.
    const Rational lo = gen.rational(4), hi = lo + Rational(gen.integer(1, 12), 2);
    std::size_t expected = 0;
    for (const auto& r : roots) expected += (lo < r && r <= hi) ? 1 : 0;
    CHECK(count_real_roots(f, lo, hi) == expected);

    // Isolation finds each constructed root.
    const auto intervals = isolate_real_roots(f);
    REQUIRE(intervals.size() == roots.size());
    auto it = roots.begin();
    for (const auto& iv : intervals) {
      CHECK(iv.lo <= *it);
      CHECK(*it <= iv.hi);
      ++it;
    }

    // Real-rootedness is invariant under x -> s x + t.
    const Rational s = gen.nonzero(3), t = gen.rational(3);
    CHECK(is_real_rooted(compose_affine(f, s, t)).verdict == cert.verdict);
  }
}

TEST_CASE("Newton inequalities on every binomial pass") {
  Gen gen(5);
  int passes = 0;
  for (int i = 0; i < 200; ++i) {
    GammaSequence g = gen.sequence();
    if (i % 4 == 0) g = GammaSequence::geometric(gen.nonzero(3), gen.nonzero(3));
    const std::size_t bound = 10;
    if (!polya_schur_check(g, bound).passed()) continue;
    ++passes;
    for (std::size_t n = 2; n <= bound; ++n) {
      const RationalPoly image = binomial_image(g, n);
      for (std::size_t k = 1; k + 1 <= n; ++k) {
        const Rational pk = image[k] / Rational(binomial(n, k));
        const Rational pm = image[k - 1] / Rational(binomial(n, k - 1));
        const Rational pp = image[k + 1] / Rational(binomial(n, k + 1));
        CHECK(pk * pk >= pm * pp);
      }
    }
  }
  CHECK(passes > 40);
}

TEST_CASE("apply_sequence is linear") {
  Gen gen(6);
  for (int i = 0; i < 200; ++i) {
    const SimpleSet basis = gen.basis();
    const GammaSequence g = gen.sequence();
    const RationalPoly f = gen.poly(6), h = gen.poly(6);
    const Rational r = gen.rational();
    CHECK(apply_sequence(g, f + h, basis) == apply_sequence(g, f, basis) + apply_sequence(g, h, basis));
    CHECK(apply_sequence(g, f * r, basis) == apply_sequence(g, f, basis) * r);
    CHECK(apply_sequence(scale_sequence(g, r), f, basis) == apply_sequence(g, f, basis) * r);
  }
}

TEST_CASE("counterexamples transfer under affine changes of basis") {
  Gen gen(7);
  FalsifyOptions opts;
  opts.degree_budget = 4;
  opts.trials = 20;
  int transferred = 0;
  for (int i = 0; i < 40; ++i) {
    const SimpleSet basis = gen.basis();
    const GammaSequence g = gen.sequence();
    opts.seed = static_cast<std::uint64_t>(i);
    const auto report = falsify(g, basis, opts);
    if (!report.falsified()) continue;
    ++transferred;
    const Rational a = gen.nonzero(3), b = gen.rational(3);
    const SimpleSet moved = affine_transform_basis(
        basis, [](std::size_t k) { return Rational(static_cast<long>(k) + 1, 2); }, a, b);
    const RationalPoly f_hat = compose_affine(report.counterexample->f, a, b);
    const RationalPoly image = apply_sequence(g, f_hat, moved);
    CHECK(image == compose_affine(report.counterexample->image, a, b));
    CHECK(is_real_rooted(f_hat).real_rooted());
    CHECK(is_real_rooted(image).verdict == Verdict::HasNonRealRoot);
  }
  CHECK(transferred > 5);
}

TEST_CASE("power closure on the regression corpus") {
  const std::vector<GammaSequence> corpus = {
      GammaSequence({Rational(1, 8), 1, 2}), GammaSequence({1, 1, 2}), GammaSequence({1, 2, 3}),
      GammaSequence({1, -1, 1}), GammaSequence::geometric(1, Rational(1, 2)), GammaSequence::geometric(1, 2),
      GammaSequence({1, 1, 1, 5}), GammaSequence({2, 1, 1})};
  const std::vector<SimpleSet> bases = {q1_basis(), q2_basis(), q3_basis(), generalized_hermite_basis(1),
                                        generalized_hermite_basis(-1), legendre_basis()};
  FalsifyOptions opts;
  opts.degree_budget = 4;
  opts.trials = 20;
  int lifted_count = 0;
  for (const auto& g : corpus) {
    for (const auto& basis : bases) {
      for (unsigned m : {2u, 3u}) {
        const auto powered = falsify(power_sequence(g, m), basis, opts);
        if (!powered.falsified()) continue;
        const auto lifted = lift_power_counterexample(g, m, powered.counterexample->f, basis);
        REQUIRE(lifted.has_value());
        CHECK(*lifted->degree() <= opts.degree_budget);
        CHECK(is_real_rooted(*lifted).real_rooted());
        CHECK(is_real_rooted(apply_sequence(g, *lifted, basis)).verdict == Verdict::HasNonRealRoot);
        ++lifted_count;
      }
    }
  }
  CHECK(lifted_count > 10);
}

TEST_CASE("falsify determinism on random inputs") {
  Gen gen(8);
  for (int i = 0; i < 10; ++i) {
    const SimpleSet basis = gen.basis();
    const GammaSequence g = gen.sequence();
    FalsifyOptions opts;
    opts.degree_budget = 5;
    opts.trials = 60;
    opts.seed = static_cast<std::uint64_t>(gen.integer(0, 1000));
    const auto a = falsify(g, basis, opts);
    opts.jobs = 3;
    const auto b = falsify(g, basis, opts);
    CHECK(a.candidates_examined == b.candidates_examined);
    REQUIRE(a.falsified() == b.falsified());
    if (a.falsified()) CHECK(a.counterexample->f == b.counterexample->f);
  }
}
