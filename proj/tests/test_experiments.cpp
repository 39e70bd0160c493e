#include "doctest.h"

#include "hypersieve/en_bound.hpp"
#include "hypersieve/experiments.hpp"
#include "hypersieve/poly_parse.hpp"

using namespace hypersieve;

namespace {
RationalPoly P(const char* text) { return parse_polynomial(text); }

EnBound bound(const SimpleSet& basis, std::size_t n, const Rational& tol, bool simple = true) {
  EnBoundOptions opts;
  opts.tol = tol;
  opts.require_simple = simple;
  return en_max_bound(basis, n, opts);
}

void check_bracket(const EnBound& b, const Rational& exact, const Rational& tol) {
  CHECK(b.lo <= exact);
  CHECK(exact <= b.hi);
  CHECK(b.width() <= tol);
  CHECK(b.lo_certificate.verdict == Verdict::AllRealRooted);
  CHECK(b.hi_certificate.verdict == Verdict::HasNonRealRoot);
}
}  // namespace

TEST_CASE("E_n membership") {
  const SimpleSet h1 = generalized_hermite_basis(1);
  CHECK(en_member_candidate(h1, 2, 1) == P("x^2"));
  CHECK(in_en(h1, 2, 1));
  CHECK_FALSE(in_en(h1, 2, Rational(1025, 1024)));
  CHECK(in_en(h1, 2, -100));
}

TEST_CASE("en_max_bound against closed forms") {
  const Rational tol(1, 256);
  // x^2 - 1 + b: real-rooted iff b <= 1.
  check_bracket(bound(generalized_hermite_basis(1), 2, tol), 1, tol);
  // x^3 - 3x + b x = x (x^2 - 3 + b): iff b <= 3.
  check_bracket(bound(generalized_hermite_basis(1), 3, tol), 3, tol);
  // The discriminant of x^4 - 6x^2 + 3 + b (x^2 - 1) is -16 (b - 3)(b^2 - 8b + 24)^2.
  const auto b4 = bound(generalized_hermite_basis(1), 4, tol);
  check_bracket(b4, 3, tol);
  CHECK(b4.lo > 0);
  // (3x^2 - 1)/2 + b: iff b <= 1/2.
  check_bracket(bound(legendre_basis(), 2, Rational(1, 4096)), Rational(1, 2), Rational(1, 4096));
  // Scaling: H^(alpha) gives alpha times the H^(1) value at n = 2.
  check_bracket(bound(generalized_hermite_basis(Rational(1, 3)), 2, tol), Rational(1, 3), tol);
}

TEST_CASE("en_max_bound errors") {
  CHECK_THROWS_AS(bound(generalized_hermite_basis(1), 1, Rational(1, 8)), Error);
  CHECK_THROWS_AS(bound(generalized_hermite_basis(1), 2, Rational(0)), Error);
  try {
    bound(standard_basis(), 2, Rational(1, 256));
    FAIL("expected NotSimpleRealRooted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSimpleRealRooted);
  }
  // Without the simplicity demand the standard basis brackets 0.
  check_bracket(bound(standard_basis(), 2, Rational(1, 256), false), 0, Rational(1, 256));
  try {
    bound(generalized_hermite_basis(-1), 2, Rational(1, 256));
    FAIL("expected an error for q_2 = x^2 + 1");
  } catch (const Error& e) {
    CHECK((e.code() == ErrorCode::NotSimpleRealRooted || e.code() == ErrorCode::NotRealRooted));
  }
  // x^2 + b q_0 with q_0 = -1 is real-rooted for every b >= 0.
  const SimpleSet unbounded = custom_basis({P("-1"), P("x"), P("x^2 - 1")});
  EnBoundOptions opts;
  opts.cap = 1024;
  try {
    en_max_bound(unbounded, 2, opts);
    FAIL("expected NoUpperBoundFound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoUpperBoundFound);
  }
}

TEST_CASE("deformed expansion trace") {
  const auto trace = deformed_expansion_trace(P("x^2 - 1"), q2_basis(), standard_basis(), {10, 100, 1000});
  CHECK(trace.limit_coefficients == std::vector<Rational>{-1, 0, 1});
  REQUIRE(trace.records.size() == 3);
  for (const auto& rec : trace.records) {
    CHECK(rec.coefficients == std::vector<Rational>{-1, -1 / rec.alpha, 1});
  }
  CHECK(trace.schedule() == std::vector<Rational>{10, 100, 1000});

  const auto same = deformed_expansion_trace(P("x^3 + x"), legendre_basis(), legendre_basis(), {2, 3});
  for (const auto& rec : same.records) CHECK(rec.coefficients == same.limit_coefficients);

  CHECK_THROWS_AS(deformed_expansion_trace(P("x"), q2_basis(), standard_basis(), {1, 10}), Error);
  CHECK_THROWS_AS(deformed_expansion_trace(P("x"), q2_basis(), standard_basis(), {10, 10}), Error);
  CHECK_THROWS_AS(deformed_expansion_trace(RationalPoly(), q2_basis(), standard_basis(), {10}), Error);
}

TEST_CASE("convergence check") {
  const auto grid = default_grid();
  REQUIRE(grid.size() == 21);
  CHECK(grid.front() == -2);
  CHECK(grid.back() == 2);

  const auto trace = deformed_expansion_trace(P("x^2 - 1"), q2_basis(), standard_basis(), {10, 100, 1000});
  const auto report = claim_convergence_check(trace, grid, GammaSequence::constant(1));
  CHECK(report.passed());
  REQUIRE(report.steps.size() == 2);
  for (const auto& s : report.steps) {
    CHECK(s.required_factor == 5);
    // |c_{alpha,1}| = 1/alpha: the ratio is exactly 10.
    CHECK(s.coefficient_gaps[1] == 10 * s.next_coefficient_gaps[1]);
    CHECK(s.coefficient_gaps[0] == 0);
  }

  // With G constant 1, f_alpha is f itself, so the image gap vanishes.
  for (const auto& s : report.steps) CHECK(s.image_gap == 0);

  const auto peaked = claim_convergence_check(trace, grid, GammaSequence({Rational(1, 8), 1, 2}));
  CHECK(peaked.passed());
  CHECK(peaked.steps[0].image_gap > 0);

  const auto same = deformed_expansion_trace(P("x^2"), q3_basis(), q3_basis(), {10, 100});
  const auto trivial = claim_convergence_check(same, grid, GammaSequence::constant(1));
  CHECK(trivial.passed());
  CHECK(trivial.steps[0].basis_gap == 0);

  const auto short_trace = deformed_expansion_trace(P("x^2"), q2_basis(), standard_basis(), {10});
  CHECK_THROWS_AS(claim_convergence_check(short_trace, grid, GammaSequence::constant(1)), Error);
  CHECK_THROWS_AS(claim_convergence_check(trace, {}, GammaSequence::constant(1)), Error);

  // Gaps shrink by alpha'/alpha, above the required alpha'/(2 alpha) for any schedule.
  const auto slow = deformed_expansion_trace(P("x^2 - 1"), q2_basis(), standard_basis(), {10, 11});
  CHECK(claim_convergence_check(slow, grid, GammaSequence::constant(1)).passed());
}
