// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "hypersieve/basischange.hpp"
#include "hypersieve/en_bound.hpp"
#include "hypersieve/experiments.hpp"
#include "hypersieve/falsify.hpp"
#include "hypersieve/mstest.hpp"
#include "hypersieve/poly_parse.hpp"

using namespace hypersieve;

namespace {

struct Outcome {
  bool ok = true;
  std::string why;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

RationalPoly P(const char* text) { return parse_polynomial(text); }

GammaSequence peaked() { return GammaSequence({Rational(1, 8), 1, 2}); }

// Discriminant b^2 - 4ac of a quadratic; independent of the Sturm machinery.
Rational discriminant(const RationalPoly& q) { return q[1] * q[1] - 4 * q[2] * q[0]; }

bool certified_non_real(const RationalPoly& f) { return is_real_rooted(f).verdict == Verdict::HasNonRealRoot; }
bool certified_real(const RationalPoly& f) { return is_real_rooted(f).verdict == Verdict::AllRealRooted; }

Outcome criterion1() {
  Outcome o;
  const GammaSequence g = peaked();
  o.require(polya_schur_check(g, 50).passed(), "binomial check failed below degree 50");
  for (std::size_t n = 1; n <= 50; ++n) {
    const Rational nn(static_cast<long>(n));
    const RationalPoly image = binomial_image(g, n);
    o.require(image == RationalPoly({Rational(1, 8), nn, nn * (nn - 1)}), "image formula at n = " + std::to_string(n));
    o.require(certified_real(image), "image not certified at n = " + std::to_string(n));
    o.require(all_roots_nonpositive(image), "positive zero at n = " + std::to_string(n));
    const Rational disc = nn * nn - nn * (nn - 1) / 2;
    o.require(disc > 0, "discriminant cross-check at n = " + std::to_string(n));
    if (n >= 2) o.require(discriminant(image) == disc, "discriminant mismatch at n = " + std::to_string(n));
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  const GammaSequence g = peaked();
  FalsifyOptions opts;
  opts.degree_budget = 4;
  opts.trials = 0;
  for (const Rational& alpha : {Rational(-2), Rational(-1), Rational(-1, 2), Rational(1, 2), Rational(1), Rational(2)}) {
    const std::string a = format_rational(alpha);
    const SimpleSet h = generalized_hermite_basis(alpha);
    const auto report = falsify(g, h, opts);
    o.require(report.falsified(), "no counterexample for alpha = " + a);
    if (!report.falsified()) continue;
    const auto& c = *report.counterexample;
    o.require(*c.f.degree() <= 4, "witness degree exceeds budget for alpha = " + a);
    o.require(certified_real(c.f), "witness not real-rooted for alpha = " + a);
    o.require(apply_sequence(g, c.f, h) == c.image, "image mismatch for alpha = " + a);
    o.require(certified_non_real(c.image), "image real-rooted for alpha = " + a);
    if (alpha < 0) {
      const RationalPoly expected({alpha * (g.at(0) - g.at(2)), 0, g.at(2)});
      o.require(c.image == expected, "image differs from gamma_2 x^2 + alpha (gamma_0 - gamma_2) at alpha = " + a);
    }
  }
  return o;
}

Outcome criterion3() {
  Outcome o;
  // (a) gamma_2 (gamma_2 - gamma_0) = 1 * (1 - 2) < 0.
  const GammaSequence g1({2, 1, 1});
  o.require(g1.at(2) * (g1.at(2) - g1.at(0)) < 0, "Q1 sequence does not meet the sign condition");
  const RationalPoly w1 = P("4x^2+4x+1");
  const RationalPoly i1 = apply_sequence(g1, w1, q1_basis());
  o.require(certified_real(w1), "Q1 witness not real-rooted");
  o.require(certified_non_real(i1) && discriminant(i1) < 0, "Q1 image is real-rooted");

  // (b)
  FalsifyOptions opts;
  opts.degree_budget = 2;
  opts.trials = 0;
  const auto q3 = falsify(GammaSequence({1, 2, 3}), q3_basis(), opts);
  o.require(q3.falsified(), "Q3 witness not found");
  if (q3.falsified()) {
    o.require(q3.counterexample->f == P("x^2"), "Q3 witness is not x^2");
    o.require(q3.counterexample->image == P("3x^2+2"), "Q3 image is not 3x^2+2");
  }

  // (c)
  const RationalPoly i2 = apply_sequence(GammaSequence({1, -1, 1}), P("x^2"), q2_basis());
  o.require(i2 == P("x^2+2x+2") && i2 == P("(x+1)^2 + 1"), "Q2 image is not x^2+2x+2");
  o.require(is_real_rooted(i2).verdict == Verdict::HasNonRealRoot, "Q2 image not certified non-real");
  return o;
}

Outcome criterion4() {
  Outcome o;
  for (const Rational& a : {Rational(2), Rational(3), Rational(10), Rational(1, 2), Rational(1, 3), Rational(1, 10)}) {
    const GammaSequence g = GammaSequence::geometric(1, a);
    o.require(polya_schur_check(g, 20).passed(), "geometric ratio " + format_rational(a) + " failed");
    // Independent form: the image of (1+x)^n is (1 + a x)^n.
    for (std::size_t n = 1; n <= 20; ++n) {
      o.require(binomial_image(g, n) == pow(RationalPoly({1, a}), static_cast<unsigned>(n)),
                "image of (1+x)^n is not (1+ax)^n for a = " + format_rational(a));
    }
  }
  return o;
}

Outcome criterion5() {
  Outcome o;
  const auto trace = deformed_expansion_trace(P("x^2-1"), q2_basis(), standard_basis(), {10, 100, 1000});
  for (const auto& rec : trace.records) {
    const std::string a = format_rational(rec.alpha);
    o.require(rec.coefficients.size() == 3, "wrong coefficient count at alpha = " + a);
    if (rec.coefficients.size() != 3) continue;
    o.require(rec.coefficients[2] == 1, "c_2 != 1 at alpha = " + a);
    o.require(abs(rec.coefficients[1]) == 1 / rec.alpha, "|c_1| != 1/alpha at alpha = " + a);
    // Closed form of the deformed set: p_1 = x + 1/alpha, p_2 = x^2 + x/alpha + 1/alpha^2.
    o.require(rec.deformed[2] == RationalPoly({1 / (rec.alpha * rec.alpha), 1 / rec.alpha, 1}),
              "p_2 closed form at alpha = " + a);
  }
  for (const GammaSequence& g : {GammaSequence::constant(1), peaked()}) {
    const auto report = claim_convergence_check(trace, default_grid(), g);
    o.require(report.leading_coefficient_exact, "leading coefficient not exact");
    for (const auto& s : report.steps) {
      o.require(s.basis_gap >= 5 * s.next_basis_gap, "basis gap decays by less than 5 per decade");
      o.require(s.image_gap >= 5 * s.next_image_gap, "image gap decays by less than 5 per decade");
    }
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  EnBoundOptions opts;
  opts.tol = Rational(1, 256);
  const auto b = en_max_bound(generalized_hermite_basis(1), 2, opts);
  o.require(b.lo <= 1 && 1 <= b.hi, "bracket misses 1");
  o.require(b.width() <= Rational(1, 256), "bracket wider than 1/256");
  // x^2 - 1 + b has real zeros iff 4 (1 - b) >= 0.
  o.require(4 * (1 - b.lo) >= 0 && 4 * (1 - b.hi) < 0, "endpoints disagree with the discriminant");
  o.require(b.lo_certificate.verdict == Verdict::AllRealRooted &&
                b.hi_certificate.verdict == Verdict::HasNonRealRoot,
            "endpoint certificates");
  o.require(b.lo_certificate == is_real_rooted(P("x^2 - 1") + RationalPoly::constant(b.lo)) &&
                b.hi_certificate == is_real_rooted(P("x^2 - 1") + RationalPoly::constant(b.hi)),
            "endpoint certificates differ from fresh ones");
  try {
    en_max_bound(standard_basis(), 2, opts);
    o.require(false, "standard basis accepted");
  } catch (const Error& e) {
    o.require(e.code() == ErrorCode::NotSimpleRealRooted, "wrong error for the standard basis");
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  FalsifyOptions opts;
  opts.degree_budget = 8;
  const SimpleSet h1 = generalized_hermite_basis(1);
  const auto half = falsify(GammaSequence::geometric(1, Rational(1, 2)), h1, opts);
  o.require(half.falsified(), "(1/2)^k not falsified within degree 8");
  if (half.falsified()) {
    o.require(certified_real(half.counterexample->f) && certified_non_real(half.counterexample->image),
              "(1/2)^k counterexample does not re-certify");
  }
  const auto two = falsify(GammaSequence::geometric(1, 2), h1, opts);
  o.require(!two.falsified(), "2^k falsified");
  o.require(two.degree_budget == 8 && two.candidates_examined > 0, "2^k report is not budget-honest");
  return o;
}

class Rng {
public:
  explicit Rng(std::uint64_t seed) : rng_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Rational rational(long bound) { return Rational(integer(-bound, bound), integer(1, 5)); }
  Rational nonzero(long bound) {
    Rational r = rational(bound);
    while (r == 0) r = rational(bound);
    return r;
  }
  RationalPoly poly(std::size_t max_degree) {
    std::vector<Rational> c(static_cast<std::size_t>(integer(0, static_cast<long>(max_degree))) + 1);
    for (auto& v : c) v = rational(9);
    c.back() = nonzero(9);
    return RationalPoly(std::move(c));
  }

private:
  std::mt19937_64 rng_;
};

Outcome criterion8() {
  Outcome o;
  Rng rng(2024);

  for (int i = 0; i < 200; ++i) {
    const RationalPoly a = rng.poly(6), b = rng.poly(6), c = rng.poly(6);
    o.require(a * (b + c) == a * b + a * c && (a * b) * c == a * (b * c) && a + b == b + a && a * b == b * a,
              "ring laws");
  }

  const std::vector<SimpleSet> bases = {standard_basis(), q1_basis(), q2_basis(), q3_basis(),
                                        laguerre_basis(), legendre_basis(), generalized_hermite_basis(-2),
                                        generalized_hermite_basis(Rational(1, 3)), truncated_sum_basis(3)};
  for (int i = 0; i < 1000; ++i) {
    const SimpleSet& q = bases[static_cast<std::size_t>(rng.integer(0, static_cast<long>(bases.size()) - 1))];
    const RationalPoly f = rng.poly(8);
    o.require(reconstruct(expand_in_basis(f, q), q) == f, "expansion round trip");
  }

  for (int i = 0; i < 1000; ++i) {
    RationalPoly f = RationalPoly::constant(rng.nonzero(5));
    std::set<Rational> roots;
    for (long j = rng.integer(0, 5); j > 0; --j) {
      const Rational r = rng.rational(4);
      roots.insert(r);
      f *= pow(RationalPoly({-r, 1}), static_cast<unsigned>(rng.integer(1, 3)));
    }
    const bool complex_pair = rng.integer(0, 2) == 0;
    if (complex_pair) {
      const Rational re = rng.rational(3), im = rng.nonzero(3);
      f *= RationalPoly({re * re + im * im, -2 * re, 1});
    }
    const auto cert = is_real_rooted(f);
    o.require(cert.distinct_real_roots == roots.size() && cert.real_rooted() == !complex_pair,
              "Sturm count disagrees with construction");
  }

  auto binom = [](std::size_t n, std::size_t k) {
    Integer r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return Rational(r);
  };
  for (int i = 0; i < 100; ++i) {
    std::vector<Rational> prefix(static_cast<std::size_t>(rng.integer(1, 4)));
    for (auto& v : prefix) v = rng.rational(4);
    const GammaSequence g = i % 3 == 0 ? GammaSequence::geometric(1, rng.nonzero(3)) : GammaSequence(prefix);
    if (!polya_schur_check(g, 8).passed()) continue;
    for (std::size_t n = 2; n <= 8; ++n) {
      const RationalPoly image = binomial_image(g, n);
      for (std::size_t k = 1; k < n; ++k) {
        const Rational p = image[k] / binom(n, k);
        o.require(p * p >= (image[k - 1] / binom(n, k - 1)) * (image[k + 1] / binom(n, k + 1)), "Newton inequality");
      }
    }
  }

  const std::vector<GammaSequence> corpus = {peaked(), GammaSequence({1, 1, 2}), GammaSequence({1, 2, 3}),
                                             GammaSequence({2, 1, 1}), GammaSequence::geometric(1, Rational(1, 2)),
                                             GammaSequence({1, -1, 1})};
  FalsifyOptions opts;
  opts.degree_budget = 4;
  opts.trials = 20;
  for (const auto& g : corpus) {
    for (const auto& q : {q1_basis(), q2_basis(), q3_basis(), generalized_hermite_basis(1)}) {
      const auto found = falsify(g, q, opts);
      if (found.falsified()) {
        const Rational a(-3, 2), b(2);
        const SimpleSet moved = affine_transform_basis(q, Rational(5), a, b);
        const RationalPoly f_hat = compose_affine(found.counterexample->f, a, b);
        const RationalPoly image = apply_sequence(g, f_hat, moved);
        o.require(certified_real(f_hat) && certified_non_real(image), "affine covariance transfer");
      }
      const auto squared = falsify(power_sequence(g, 2), q, opts);
      if (squared.falsified()) {
        const auto lifted = lift_power_counterexample(g, 2, squared.counterexample->f, q);
        o.require(lifted && certified_real(*lifted) && certified_non_real(apply_sequence(g, *lifted, q)),
                  "power closure");
      }
    }
  }
  return o;
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  ///< 0 when no runtime bound applies
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "{1/8,1,2,0,...} binomial images real-rooted with nonpositive zeros, N = 50", 5, criterion1},
      {2, "{1/8,1,2,0,...} falsified against H^(alpha) for six alphas, budget 4, structured only", 5, criterion2},
      {3, "Q1, Q3 and Q2 witnesses with exact images", 0, criterion3},
      {4, "geometric sequences pass the binomial check at N = 20", 0, criterion4},
      {5, "alpha-deformed expansion of x^2-1 in Q2: exact coefficients and decay", 1, criterion5},
      {6, "E_2 bracket for H^(1) and simplicity check on the standard basis", 0, criterion6},
      {7, "(1/2)^k falsified and 2^k surviving against H^(1) at budget 8", 0, criterion7},
      {8, "property suites: ring laws, round trips, Sturm oracle, Newton, covariance, power closure", 60,
       criterion8},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.why = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && c.limit_seconds > 0 && secs > c.limit_seconds) {
      o.ok = false;
      std::ostringstream msg;
      msg << "runtime " << secs << " s exceeds " << c.limit_seconds << " s";
      o.why = msg.str();
    }
    std::ostringstream line;
    line.precision(3);
    line << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << std::fixed << secs
         << " s]";
    if (!o.ok) line << " -- " << o.why;
    std::cout << line.str() << std::endl;
    if (!o.ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures;
}
