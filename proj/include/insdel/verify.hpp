#pragma once

#include <string>
#include <vector>

namespace insdel {

struct SuiteResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Invariant suites: projections, zero set, ordering, monotonicity, convexity,
/// ball counts, containment probabilities and Monte Carlo determinism.
/// `quick` shrinks the grids for interactive use.
std::vector<SuiteResult> run_invariant_suites(bool quick = false);

}  // namespace insdel
