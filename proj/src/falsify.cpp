#include "hypersieve/falsify.hpp"

#include <algorithm>
#include <exception>
#include <random>
#include <thread>

#include "hypersieve/en_bound.hpp"
#include "hypersieve/mstest.hpp"

namespace hypersieve {

const std::vector<Rational>& perturbation_grid() {
  static const std::vector<Rational> grid = [] {
    std::vector<Rational> g;
    for (int e = -4; e <= 4; ++e) {
      const Rational v = e < 0 ? Rational(1, 1L << -e) : Rational(1L << e);
      g.push_back(v);
      g.push_back(-v);
    }
    return g;
  }();
  return grid;
}

const std::vector<Rational>& trial_root_grid() {
  static const std::vector<Rational> grid{Rational(-3),   Rational(-2), Rational(-1),
                                          Rational(-1, 2), Rational(0), Rational(1, 2),
                                          Rational(1),    Rational(2),  Rational(3)};
  return grid;
}

namespace {

std::string suffix(std::size_t n) { return std::to_string(n); }

void add_witnesses(const GammaSequence& g, const SimpleSet& basis, std::size_t budget,
                   std::vector<Candidate>& out) {
  if (budget < 2) return;
  const RationalPoly x2 = RationalPoly::monomial(2);
  const std::string& kind = basis.kind();
  if (kind == "q1") {
    out.push_back({RationalPoly{1, 4, 4}, "witness:4x^2+4x+1"});
  } else if (kind == "q2") {
    out.push_back({x2, "witness:x^2"});
    // a x^2 + b x + b^2/(4a) with a = t + 1, b = t + 2, t = gamma_1 / gamma_0,
    // a perfect square whose image is forced to have discriminant 1 - t^2.
    const Rational g0 = g.at(0);
    if (g0 != 0 && g.at(2) == g0) {
      const Rational t = g.at(1) / g0;
      const Rational a = t + 1;
      const Rational b = t + 2;
      if (a != 0) out.push_back({RationalPoly{b * b / (4 * a), b, a}, "witness:square-quadratic"});
    }
  } else if (kind == "q3" || kind == "generalized_hermite") {
    out.push_back({x2, "witness:x^2"});
  }
}

}  // namespace

std::vector<Candidate> structured_candidates(const GammaSequence& g, const SimpleSet& basis,
                                             std::size_t degree_budget) {
  std::vector<Candidate> out;
  add_witnesses(g, basis, degree_budget, out);
  const RationalPoly one_plus_x{1, 1};
  const RationalPoly x_minus_one{-1, 1};
  const auto& grid = perturbation_grid();
  for (std::size_t n = 1; n <= degree_budget; ++n) {
    const auto e = static_cast<unsigned>(n);
    out.push_back({RationalPoly::monomial(n), "power:x^" + suffix(n)});
    out.push_back({pow(one_plus_x, e), "binomial:(1+x)^" + suffix(n)});
    out.push_back({pow(x_minus_one, e), "binomial:(x-1)^" + suffix(n)});
    if (n < 2) continue;

    const std::string qn = "q_" + suffix(n);
    try {
      EnBoundOptions opts;
      opts.require_simple = false;
      const EnBound bound = en_max_bound(basis, n, opts);
      out.push_back({en_member_candidate(basis, n, bound.lo),
                     "extremal:" + qn + "+" + format_rational(bound.lo) + "*q_" + suffix(n - 2)});
    } catch (const Error&) {
      // q_n not real-rooted, or E_n unbounded below the cap: no extremal member.
    }
    for (const auto& b : grid) {
      out.push_back({en_member_candidate(basis, n, b),
                     "perturb:" + qn + "+" + format_rational(b) + "*q_" + suffix(n - 2)});
    }
    if (n < 4) continue;
    for (const auto& b : grid) {
      for (const auto& c : grid) {
        out.push_back({basis(n) + basis(n - 2) * b + basis(n - 4) * c,
                       "perturb2:" + qn + "+" + format_rational(b) + "*q_" + suffix(n - 2) + "+" +
                           format_rational(c) + "*q_" + suffix(n - 4)});
      }
    }
  }
  return out;
}

std::vector<Candidate> random_candidates(std::size_t degree_budget, std::size_t trials,
                                         std::uint64_t seed) {
  std::vector<Candidate> out;
  if (degree_budget == 0) return out;
  out.reserve(trials);
  std::mt19937_64 rng(seed);
  const auto& roots = trial_root_grid();
  for (std::size_t t = 0; t < trials; ++t) {
    // Plain modulo keeps the stream identical across standard libraries.
    const std::size_t degree = 1 + static_cast<std::size_t>(rng() % degree_budget);
    RationalPoly f = RationalPoly::constant(1);
    for (std::size_t i = 0; i < degree; ++i) {
      const Rational& r = roots[static_cast<std::size_t>(rng() % roots.size())];
      f *= RationalPoly{-r, Rational(1)};
    }
    out.push_back({std::move(f), "trial:" + std::to_string(t)});
  }
  return out;
}

std::optional<Counterexample> try_candidate(const GammaSequence& g, const SimpleSet& basis,
                                            const Candidate& candidate) {
  if (candidate.f.is_zero()) return std::nullopt;
  const RealRootCertificate input = is_real_rooted(candidate.f);
  if (!input.real_rooted()) return std::nullopt;
  RationalPoly image = apply_sequence(g, candidate.f, basis);
  const RealRootCertificate cert = is_real_rooted(image);
  if (cert.verdict != Verdict::HasNonRealRoot) return std::nullopt;
  return Counterexample{candidate.f, std::move(image), input, cert, candidate.source, 0};
}

FalsificationReport falsify(const GammaSequence& g, const SimpleSet& basis, const FalsifyOptions& options) {
  if (options.degree_budget == 0) throw Error(ErrorCode::InvalidArgument, "degree budget must be >= 1");
  FalsificationReport report{g, basis, options.degree_budget, options.trials, options.seed, 0, std::nullopt};

  std::vector<Candidate> candidates = structured_candidates(g, basis, options.degree_budget);
  auto trials = random_candidates(options.degree_budget, options.trials, options.seed);
  candidates.insert(candidates.end(), std::make_move_iterator(trials.begin()),
                    std::make_move_iterator(trials.end()));

  const unsigned jobs = std::max(1u, options.jobs);
  const std::size_t batch = jobs == 1 ? 1 : static_cast<std::size_t>(jobs) * 8;
  for (std::size_t start = 0; start < candidates.size(); start += batch) {
    const std::size_t end = std::min(candidates.size(), start + batch);
    std::vector<std::optional<Counterexample>> results(end - start);
    if (jobs == 1) {
      for (std::size_t i = start; i < end; ++i) results[i - start] = try_candidate(g, basis, candidates[i]);
    } else {
      std::vector<std::thread> workers;
      std::vector<std::exception_ptr> errors(jobs);
      for (unsigned w = 0; w < jobs; ++w) {
        workers.emplace_back([&, w] {
          try {
            for (std::size_t i = start + w; i < end; i += jobs) {
              results[i - start] = try_candidate(g, basis, candidates[i]);
            }
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
      for (auto& t : workers) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    for (std::size_t i = start; i < end; ++i) {
      if (auto& hit = results[i - start]) {
        hit->candidate_index = i;
        report.counterexample = std::move(*hit);
        report.candidates_examined = i + 1;
        return report;
      }
    }
  }
  report.candidates_examined = candidates.size();
  return report;
}

}  // namespace hypersieve
