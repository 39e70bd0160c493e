#include "hypersieve/facts.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "hypersieve/en_bound.hpp"
#include "hypersieve/experiments.hpp"
#include "hypersieve/falsify.hpp"
#include "hypersieve/mstest.hpp"
#include "hypersieve/poly_parse.hpp"

namespace hypersieve {

std::string_view to_string(FactStatus s) {
  switch (s) {
    case FactStatus::Pass: return "PASS";
    case FactStatus::Fail: return "FAIL";
    case FactStatus::SkippedBudget: return "SKIPPED-BUDGET";
  }
  return "FAIL";
}

namespace {

// Collects the outcome of one fact. The first failure wins over a skip.
class Fact {
public:
  void check(bool ok, const std::string& what) {
    detail_.push_back((ok ? "ok: " : "failed: ") + what);
    if (!ok) failed_ = true;
  }
  void skip(const std::string& what) {
    detail_.push_back("skipped: " + what);
    skipped_ = true;
  }

  FactStatus status() const {
    if (failed_) return FactStatus::Fail;
    return skipped_ ? FactStatus::SkippedBudget : FactStatus::Pass;
  }
  std::vector<std::string> take_detail() { return std::move(detail_); }

private:
  std::vector<std::string> detail_;
  bool failed_ = false;
  bool skipped_ = false;
};

GammaSequence peaked_sequence() { return GammaSequence({Rational(1, 8), 1, 2}); }

std::string show(const RationalPoly& f) { return format_polynomial(f); }

void peaked_is_classical(Fact& fact, const FactConfig&) {
  const GammaSequence g = peaked_sequence();
  const auto result = polya_schur_check(g, 50);
  fact.check(result.passed(), "binomial images real-rooted for n = 1..50");
  bool formula = true;
  bool nonpositive = true;
  for (std::size_t n = 1; n <= 50; ++n) {
    const Rational nn(static_cast<long>(n));
    const RationalPoly expected({Rational(1, 8), nn, nn * (nn - 1)});
    const RationalPoly image = binomial_image(g, n);
    formula = formula && image == expected;
    nonpositive = nonpositive && all_roots_nonpositive(image);
  }
  fact.check(formula, "image of (1+x)^n equals 1/8 + n x + n(n-1) x^2");
  fact.check(nonpositive, "every image has only nonpositive zeros");
  fact.check(apply_sequence(g, parse_polynomial("(1+x)^3"), standard_basis()) ==
                 parse_polynomial("6x^2 + 3x + 1/8"),
             "(1+x)^3 maps to 6x^2 + 3x + 1/8");
  fact.check(turan_check(g, 50).passed(), "Turan inequalities hold");
}

void peaked_not_hermite(Fact& fact, const FactConfig& cfg) {
  const GammaSequence g = peaked_sequence();
  FalsifyOptions opts;
  opts.degree_budget = std::min<std::size_t>(cfg.degree_budget, 4);
  opts.trials = 0;
  opts.seed = cfg.seed;
  opts.jobs = cfg.jobs;
  for (const Rational& alpha : {Rational(-2), Rational(-1), Rational(-1, 2), Rational(1, 2), Rational(1),
                               Rational(2)}) {
    const std::string label = "alpha = " + format_rational(alpha);
    const auto report = falsify(g, generalized_hermite_basis(alpha), opts);
    if (!report.falsified()) {
      // Positive alpha needs a quartic witness.
      const std::size_t needed = alpha.sign() < 0 ? 2 : 4;
      if (opts.degree_budget < needed) {
        fact.skip(label + ": needs degree budget " + std::to_string(needed));
      } else {
        fact.check(false, label + ": no counterexample within budget " + std::to_string(opts.degree_budget));
      }
      continue;
    }
    const auto& c = *report.counterexample;
    fact.check(true, label + ": f = " + show(c.f) + " maps to " + show(c.image));
    if (alpha.sign() < 0) {
      const RationalPoly expected = RationalPoly({alpha * (g.at(0) - g.at(2)), 0, g.at(2)});
      fact.check(c.image == expected, label + ": image equals gamma_2 x^2 + alpha (gamma_0 - gamma_2)");
    }
  }
  const auto mono = monotone_after_first_check(g, 10);
  fact.check(mono.fail_at == std::size_t{2}, "gamma_2 > gamma_1 breaks monotonicity after the first term");
}

void intersection_witnesses(Fact& fact, const FactConfig&) {
  const RationalPoly q1_witness = parse_polynomial("4x^2+4x+1");
  const RationalPoly q1_image = apply_sequence(GammaSequence({2, 1, 1}), q1_witness, q1_basis());
  fact.check(is_real_rooted(q1_witness).verdict == Verdict::AllRealRooted &&
                 is_real_rooted(q1_image).verdict == Verdict::HasNonRealRoot,
             "Q1: {2,1,1} sends 4x^2+4x+1 to " + show(q1_image));

  const RationalPoly q3_image = apply_sequence(GammaSequence({1, 2, 3}), parse_polynomial("x^2"), q3_basis());
  fact.check(q3_image == parse_polynomial("3x^2+2") &&
                 is_real_rooted(q3_image).verdict == Verdict::HasNonRealRoot,
             "Q3: {1,2,3} sends x^2 to " + show(q3_image));

  const RationalPoly q2_image = apply_sequence(GammaSequence({1, -1, 1}), parse_polynomial("x^2"), q2_basis());
  fact.check(q2_image == parse_polynomial("(x+1)^2 + 1") &&
                 is_real_rooted(q2_image).verdict == Verdict::HasNonRealRoot,
             "Q2: {1,-1,1} sends x^2 to " + show(q2_image));
}

void geometric_classical(Fact& fact, const FactConfig&) {
  for (const Rational& r : {Rational(2), Rational(3), Rational(10), Rational(1, 2), Rational(1, 3),
                           Rational(1, 10)}) {
    const auto result = polya_schur_check(GammaSequence::geometric(1, r), 20);
    fact.check(result.passed(), "{(" + format_rational(r) + ")^k} passes up to degree 20");
  }
}

void deformed_convergence(Fact& fact, const FactConfig&) {
  const RationalPoly f = parse_polynomial("x^2 - 1");
  const auto trace = deformed_expansion_trace(f, q2_basis(), standard_basis(), {10, 100, 1000});
  for (const auto& rec : trace.records) {
    const bool exact = rec.coefficients == std::vector<Rational>{-1, -1 / rec.alpha, 1};
    fact.check(exact, "alpha = " + format_rational(rec.alpha) + ": coefficients (-1, -1/alpha, 1)");
  }
  const auto report = claim_convergence_check(trace, default_grid(), GammaSequence::constant(1));
  fact.check(report.leading_coefficient_exact, "leading coefficient exact at every alpha");
  for (const auto& s : report.steps) {
    fact.check(s.basis_ok && s.coefficients_ok && s.image_ok,
               "gaps shrink by >= " + format_rational(s.required_factor) + " from alpha = " +
                   format_rational(s.alpha) + " to " + format_rational(s.next_alpha));
  }
}

void en_extremal(Fact& fact, const FactConfig& cfg) {
  EnBoundOptions opts;
  opts.tol = Rational(1, 256);
  const auto bound = en_max_bound(generalized_hermite_basis(1), 2, opts);
  fact.check(bound.lo <= 1 && 1 <= bound.hi && bound.width() <= opts.tol,
             "E_2 for H^(1) bracketed by [" + format_rational(bound.lo) + ", " + format_rational(bound.hi) + "]");
  const SimpleSet h1 = generalized_hermite_basis(1);
  fact.check(is_real_rooted(en_member_candidate(h1, 2, bound.lo)).verdict == Verdict::AllRealRooted &&
                 is_real_rooted(en_member_candidate(h1, 2, bound.hi)).verdict == Verdict::HasNonRealRoot,
             "bracket endpoints re-certified");
  try {
    en_max_bound(standard_basis(), 2);
    fact.check(false, "standard basis with q_2 = x^2 was accepted");
  } catch (const Error& e) {
    fact.check(e.code() == ErrorCode::NotSimpleRealRooted, "x^2 rejected: double root");
  }
  EnBoundOptions opts4;
  opts4.tol = cfg.tol;
  const auto b4 = en_max_bound(h1, 4, opts4);
  fact.check(b4.lo > 0, "E_4 for H^(1) has positive lower end " + format_rational(b4.lo));
}

void geometric_hermite(Fact& fact, const FactConfig& cfg) {
  FalsifyOptions opts;
  opts.degree_budget = std::min<std::size_t>(cfg.degree_budget, 8);
  opts.trials = cfg.trials;
  opts.seed = cfg.seed;
  opts.jobs = cfg.jobs;
  const SimpleSet h1 = generalized_hermite_basis(1);
  const auto half = falsify(GammaSequence::geometric(1, Rational(1, 2)), h1, opts);
  if (half.falsified()) {
    fact.check(true, "{(1/2)^k}: f = " + show(half.counterexample->f) + " maps to " +
                         show(half.counterexample->image));
  } else if (opts.degree_budget < 2) {
    fact.skip("{(1/2)^k}: needs degree budget 2");
  } else {
    fact.check(false, "{(1/2)^k}: no counterexample within budget");
  }
  const auto two = falsify(GammaSequence::geometric(1, 2), h1, opts);
  fact.check(!two.falsified(), "{2^k}: none found among " + std::to_string(two.candidates_examined) +
                                   " candidates up to degree " + std::to_string(opts.degree_budget));
}

void sequence_laws(Fact& fact, const FactConfig& cfg) {
  const std::vector<GammaSequence> corpus = {
      peaked_sequence(), GammaSequence::geometric(1, 2), GammaSequence::geometric(1, Rational(1, 2)),
      GammaSequence({1, 1, 2}), GammaSequence({1, 2, 3}), GammaSequence({1, 1, 1, 5})};

  // Newton inequalities on every pass.
  bool newton = true;
  for (const auto& g : corpus) {
    if (polya_schur_check(g, 12).passed()) newton = newton && turan_check(g, 11).passed();
  }
  fact.check(newton, "Newton inequalities hold on every passing sequence");

  const auto extrap = geometric_extrapolation(GammaSequence({1, 1, 1, 5}));
  fact.check(extrap && extrap->alpha == 1 && !extrap->violations.empty() && extrap->violations.front() == 3 &&
                 !polya_schur_check(GammaSequence({1, 1, 1, 5}), 8).passed(),
             "{1,1,1,5}: geometric start broken at k = 3 and binomial check fails by degree 8");
  fact.check(!polya_schur_check(GammaSequence({1, 1, 2}), 8).passed(), "{1,1,2}: binomial check fails");

  FalsifyOptions opts;
  opts.degree_budget = std::min<std::size_t>(cfg.degree_budget, 4);
  opts.trials = 0;
  opts.jobs = cfg.jobs;

  // Power closure: a counterexample for g^2 lifts to one for g.
  const SimpleSet q3 = q3_basis();
  bool closure = true;
  for (const auto& g : corpus) {
    const auto squared = falsify(power_sequence(g, 2), q3, opts);
    if (!squared.falsified()) continue;
    const auto lifted = lift_power_counterexample(g, 2, squared.counterexample->f, q3);
    closure = closure && lifted && is_real_rooted(*lifted).verdict == Verdict::AllRealRooted &&
              is_real_rooted(apply_sequence(g, *lifted, q3)).verdict == Verdict::HasNonRealRoot;
  }
  fact.check(closure, "counterexamples for squared sequences lift to the sequence itself");

  // Affine covariance: f(ax+b) is a counterexample for the transformed basis.
  const Rational a(-2), b(1, 3);
  bool covariance = true;
  for (const auto& g : corpus) {
    const auto found = falsify(g, q3, opts);
    if (!found.falsified()) continue;
    const SimpleSet moved = affine_transform_basis(q3, Rational(3), a, b);
    const RationalPoly f_hat = compose_affine(found.counterexample->f, a, b);
    const RationalPoly image = apply_sequence(g, f_hat, moved);
    covariance = covariance && image == compose_affine(found.counterexample->image, a, b) &&
                 is_real_rooted(f_hat).verdict == Verdict::AllRealRooted &&
                 is_real_rooted(image).verdict == Verdict::HasNonRealRoot;
  }
  fact.check(covariance, "counterexamples transfer under x -> -2x + 1/3");
}

struct FactEntry {
  const char* id;
  const char* description;
  std::function<void(Fact&, const FactConfig&)> run;
};

}  // namespace

std::vector<FactResult> run_facts(const FactConfig& config) {
  const std::vector<FactEntry> entries = {
      {"peaked-sequence-classical", "{1/8,1,2,0,...} is a classical multiplier sequence up to degree 50",
       peaked_is_classical},
      {"peaked-sequence-not-hermite", "{1/8,1,2,0,...} is not a multiplier sequence for any H^(alpha)",
       peaked_not_hermite},
      {"intersection-witnesses", "explicit Q1, Q2, Q3 witnesses against non-constant sequences",
       intersection_witnesses},
      {"geometric-sequences-classical", "geometric sequences pass the binomial test up to degree 20",
       geometric_classical},
      {"deformed-expansion-convergence", "alpha-deformed expansions of x^2-1 converge at rate 1/alpha",
       deformed_convergence},
      {"en-extremal-bound", "extremal perturbation bounds for q_n + b q_{n-2}", en_extremal},
      {"geometric-hermite-threshold", "{r^k} against H^(1): r = 1/2 falsified, r = 2 survives",
       geometric_hermite},
      {"sequence-laws", "Newton, extrapolation, power closure and affine covariance laws", sequence_laws},
  };

  std::vector<FactResult> results;
  for (const auto& entry : entries) {
    FactResult result{entry.id, entry.description, FactStatus::Fail, {}, 0};
    Fact fact;
    const auto start = std::chrono::steady_clock::now();
    try {
      entry.run(fact, config);
    } catch (const Error& e) {
      fact.check(false, std::string("error ") + std::string(to_string(e.code())) + ": " + e.what());
    }
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.status = fact.status();
    result.detail = fact.take_detail();
    results.push_back(std::move(result));
  }
  return results;
}

bool all_passed(const std::vector<FactResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const FactResult& r) { return r.status == FactStatus::Pass; });
}

}  // namespace hypersieve
