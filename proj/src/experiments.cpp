#include "hypersieve/experiments.hpp"

#include <algorithm>

namespace hypersieve {

std::vector<Rational> ConvergenceTrace::schedule() const {
  std::vector<Rational> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.alpha);
  return out;
}

ConvergenceTrace deformed_expansion_trace(const RationalPoly& f, const SimpleSet& from,
                                          const SimpleSet& to, const std::vector<Rational>& schedule) {
  if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "convergence trace of the zero polynomial");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] <= 1 || (i > 0 && schedule[i] <= schedule[i - 1])) {
      throw Error(ErrorCode::InvalidArgument, "schedule must be strictly increasing and > 1");
    }
  }
  const std::size_t n = *f.degree();
  ConvergenceTrace trace;
  trace.f = f;
  trace.from = from.name();
  trace.to = to.name();
  trace.limit_coefficients = expand_in_basis(f, to);
  for (std::size_t k = 0; k <= n; ++k) trace.target_polys.push_back(to(k));

  for (const auto& alpha : schedule) {
    const SimpleSet deformed = alpha_deformed_basis(from, to, alpha, n);
    DeformedRecord rec{alpha, expand_in_basis(f, deformed), {}};
    for (std::size_t k = 0; k <= n; ++k) rec.deformed.push_back(deformed(k));
    trace.records.push_back(std::move(rec));
  }
  return trace;
}

std::vector<Rational> default_grid() {
  std::vector<Rational> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(Rational(-2) + Rational(i, 5));
  return grid;
}

namespace {

bool decays(const Rational& gap, const Rational& next_gap, const Rational& factor) {
  if (next_gap == 0) return true;
  return gap >= factor * next_gap;
}

Rational max_gap(const std::vector<Rational>& grid, const RationalPoly& a, const RationalPoly& b) {
  const RationalPoly diff = a - b;
  Rational worst = 0;
  for (const auto& x : grid) worst = std::max(worst, abs(diff.evaluate(x)));
  return worst;
}

struct Gaps {
  Rational basis;
  std::vector<Rational> coefficients;
  Rational image;
};

Gaps gaps_for(const ConvergenceTrace& trace, const DeformedRecord& rec, const std::vector<Rational>& grid,
              const GammaSequence& g) {
  const std::size_t n = trace.limit_coefficients.size() - 1;
  Gaps out;
  RationalPoly f_alpha;
  RationalPoly limit;
  for (std::size_t k = 0; k <= n; ++k) {
    out.basis = std::max(out.basis, max_gap(grid, rec.deformed[k], trace.target_polys[k]));
    if (k < n) out.coefficients.push_back(abs(rec.coefficients[k] - trace.limit_coefficients[k]));
    const Rational gk = g.at(k);
    f_alpha += rec.deformed[k] * (rec.coefficients[k] * gk);
    limit += trace.target_polys[k] * (trace.limit_coefficients[k] * gk);
  }
  out.image = max_gap(grid, f_alpha, limit);
  return out;
}

}  // namespace

bool ConvergenceReport::passed() const {
  if (!leading_coefficient_exact) return false;
  return std::all_of(steps.begin(), steps.end(), [](const DecayStep& s) {
    return s.basis_ok && s.coefficients_ok && s.image_ok;
  });
}

ConvergenceReport claim_convergence_check(const ConvergenceTrace& trace,
                                          const std::vector<Rational>& grid, const GammaSequence& g) {
  if (trace.records.size() < 2) {
    throw Error(ErrorCode::ScheduleTooShort, "convergence check needs at least two schedule entries");
  }
  if (grid.empty()) throw Error(ErrorCode::InvalidArgument, "convergence check needs grid points");

  ConvergenceReport report;
  const std::size_t n = trace.limit_coefficients.size() - 1;
  report.leading_coefficient_exact =
      std::all_of(trace.records.begin(), trace.records.end(), [&](const DeformedRecord& r) {
        return r.coefficients.size() == n + 1 && r.coefficients[n] == trace.limit_coefficients[n];
      });

  std::vector<Gaps> gaps;
  for (const auto& rec : trace.records) gaps.push_back(gaps_for(trace, rec, grid, g));

  for (std::size_t i = 0; i + 1 < trace.records.size(); ++i) {
    const auto& cur = gaps[i];
    const auto& next = gaps[i + 1];
    DecayStep step;
    step.alpha = trace.records[i].alpha;
    step.next_alpha = trace.records[i + 1].alpha;
    step.required_factor = step.next_alpha / (2 * step.alpha);
    step.basis_gap = cur.basis;
    step.next_basis_gap = next.basis;
    step.coefficient_gaps = cur.coefficients;
    step.next_coefficient_gaps = next.coefficients;
    step.image_gap = cur.image;
    step.next_image_gap = next.image;
    step.basis_ok = decays(cur.basis, next.basis, step.required_factor);
    step.coefficients_ok = true;
    for (std::size_t k = 0; k < cur.coefficients.size(); ++k) {
      step.coefficients_ok =
          step.coefficients_ok && decays(cur.coefficients[k], next.coefficients[k], step.required_factor);
    }
    step.image_ok = decays(cur.image, next.image, step.required_factor);
    report.steps.push_back(std::move(step));
  }
  return report;
}

}  // namespace hypersieve
