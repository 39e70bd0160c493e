#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypersieve/bases.hpp"
#include "hypersieve/realroots.hpp"
#include "hypersieve/sequence.hpp"

namespace hypersieve {

/// A real-rooted input polynomial together with its provenance.
struct Candidate {
  RationalPoly f;
  std::string source;
};

struct Counterexample {
  RationalPoly f;
  RationalPoly image;
  RealRootCertificate input_certificate;
  RealRootCertificate certificate;
  std::string source;
  std::size_t candidate_index = 0;
};

struct FalsifyOptions {
  std::size_t degree_budget = 8;
  std::size_t trials = 500;
  std::uint64_t seed = 0;
  /// Worker threads; results never depend on this.
  unsigned jobs = 1;
};

struct FalsificationReport {
  GammaSequence sequence;
  SimpleSet basis;
  std::size_t degree_budget = 0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t candidates_examined = 0;
  std::optional<Counterexample> counterexample;

  bool falsified() const noexcept { return counterexample.has_value(); }
};

/// Grid for the perturbation parameters b, c in q_n + b q_{n-2} (+ c q_{n-4}).
const std::vector<Rational>& perturbation_grid();

/// Roots used by the random trial products.
const std::vector<Rational>& trial_root_grid();

/// Structured candidates in search order: basis-specific witnesses first,
/// then for n = 1..budget the binomial powers and the perturbations of q_n.
/// Candidates are not yet certified.
std::vector<Candidate> structured_candidates(const GammaSequence& g, const SimpleSet& basis,
                                             std::size_t degree_budget);

/// `trials` random products of (x - r_i) over trial_root_grid(), degree
/// 1..budget, deterministic in the seed.
std::vector<Candidate> random_candidates(std::size_t degree_budget, std::size_t trials,
                                         std::uint64_t seed);

/// Tests one candidate: certified real-rooted input whose image has a
/// non-real root.
std::optional<Counterexample> try_candidate(const GammaSequence& g, const SimpleSet& basis,
                                            const Candidate& candidate);

/// Searches for a real-rooted f with a non-real-rooted image. The reported
/// counterexample is the first one in enumeration order. A report without a
/// counterexample is budget-limited evidence only.
FalsificationReport falsify(const GammaSequence& g, const SimpleSet& basis,
                            const FalsifyOptions& options = {});

}  // namespace hypersieve
