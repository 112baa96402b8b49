#pragma once

#include <optional>
#include <vector>

#include "insdel/types.hpp"

namespace insdel {

/// Convex interpolation between the spokes at d/q and (d+1)/q.
///
/// With d = floor(delta q) and alpha = 1 - delta q + d, the insertion budget
/// splits as n0_weight * gamma0 + n1_weight * gamma1 = gamma, where gamma_j
/// are insertion rates relative to each reduced segment.
struct InterpolationSetup {
  int d = 0;
  double alpha = 1.0;
  double n0_weight = 1.0;
  double n1_weight = 0.0;
  /// reduced alphabet sizes q - d and q - d - 1
  int k0 = 2;
  int k1 = 1;
  /// smallest gamma at which the interpolated bound reaches zero; equals the F_q boundary at delta
  double zero_gamma = 0.0;
};

InterpolationSetup make_interpolation_setup(AlphabetSize q, double delta);

enum class SplitMethod {
  NoInsertions,
  SingleSpoke,
  DegenerateSecondSpoke,
  PrintedClosedForm,
  DerivedClosedForm,
  NumericSearch,
  OutsideRegion,
};

const char* to_string(SplitMethod method);

struct GammaSplit {
  double gamma0 = 0.0;
  double gamma1 = 0.0;
  /// raw two-spoke value at this split
  double objective = 0.0;
  SplitMethod method = SplitMethod::NoInsertions;
  /// admissible interval for gamma0
  double lower = 0.0;
  double upper = 0.0;
  /// The printed closed form (A - sqrt(B^2 + C)) / (2 alpha (q - d)) when it is defined.
  std::optional<double> printed_candidate;
  /// |lhs / rhs - 1| of (1 + 1/g1)(1 - 1/(q-d-1)) = (1 + 1/g0)(1 - 1/(q-d)) at an interior optimum.
  std::optional<double> stationarity_residual;
};

/// Raw two-term value of the interpolated bound for a given gamma0.
///
/// gamma1 follows from the linear constraint. Throws DomainError if the implied
/// gamma1 is negative, DegenerateSpokeError if a unary spoke receives insertions.
double interpolated_bound_at_split(AlphabetSize q, double gamma, double delta, double gamma0);

/// The stationarity residual |lhs/rhs - 1| for a split with both parts positive.
double stationarity_residual(const InterpolationSetup& setup, double gamma0, double gamma1);

/// The printed closed-form candidate; empty when B^2 + C < 0.
std::optional<double> printed_optimal_gamma0(AlphabetSize q, double gamma, double delta);

/// Minimizing split of the insertion budget between the two neighboring spokes.
GammaSplit optimal_gamma0(AlphabetSize q, double gamma, double delta);

/// Outer bound for 0 <= delta <= 1 - 1/q from the optimal two-spoke interpolation.
BoundValue interpolated_outer_bound(AlphabetSize q, double gamma, double delta);

struct CombinedBound {
  BoundValue best;
  /// every candidate that entered the minimum, in evaluation order
  std::vector<BoundValue> candidates;
};

/// Minimum of all applicable outer bounds with the individual values retained.
CombinedBound combined_outer_bound_detail(AlphabetSize q, double gamma, double delta);

/// Minimum of the applicable outer bounds; `source` names the minimizer.
BoundValue combined_outer_bound(AlphabetSize q, double gamma, double delta);

/// Evaluates any bound source at one point.
///
/// insertion-only ignores delta and deletion-only ignores gamma (both remain
/// valid outer bounds there). Points outside a source's domain (spoke off the
/// lines delta = d/q, f outside its convexity domain) give rate 0, infeasible,
/// no raw value. Throws DomainError for points outside 0 <= delta <= 1 - 1/q,
/// 0 <= gamma <= q - 1.
BoundValue evaluate_bound(BoundSource source, AlphabetSize q, double gamma, double delta);

}  // namespace insdel
