#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hypersieve/rational.hpp"

namespace hypersieve {

struct FactConfig {
  std::size_t degree_budget = 8;
  std::size_t trials = 500;
  std::uint64_t seed = 0;
  Rational tol{1, 1024};
  unsigned jobs = 1;
};

enum class FactStatus { Pass, Fail, SkippedBudget };

std::string_view to_string(FactStatus s);

struct FactResult {
  std::string id;
  std::string description;
  FactStatus status = FactStatus::Fail;
  std::vector<std::string> detail;
  double seconds = 0;
};

/// Runs the regression corpus of known facts. A fact whose falsification
/// needs a larger degree budget than configured is SkippedBudget.
std::vector<FactResult> run_facts(const FactConfig& config = {});

/// True when every fact passed.
bool all_passed(const std::vector<FactResult>& results);

}  // namespace hypersieve
