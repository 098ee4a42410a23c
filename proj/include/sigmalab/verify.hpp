#pragma once

#include <string>
#include <vector>

namespace sigmalab {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
};

inline constexpr int criterion_count = 10;

/// Runs one numbered conformance criterion (1..10) at its documented tolerance.
CriterionResult run_criterion(int id, double tol = 1e-8);

/// Runs the listed criteria in ascending order; all ten when ids is empty.
std::vector<CriterionResult> run_criteria(std::vector<int> ids, double tol = 1e-8);

}  // namespace sigmalab
