#include "insdel/outer_bound.hpp"

#include <algorithm>
#include <cmath>

#include "insdel/bounds.hpp"
#include "insdel/geometry.hpp"
#include "insdel/golden_section.hpp"

namespace insdel {

namespace {

constexpr double kStationarityTolerance = 1e-9;
constexpr double kConstraintSlack = 1e-12;

double top_delta(AlphabetSize q) { return 1.0 - 1.0 / q.as_double(); }

}  // namespace

const char* to_string(SplitMethod method) {
  switch (method) {
    case SplitMethod::NoInsertions: return "no-insertions";
    case SplitMethod::SingleSpoke: return "single-spoke";
    case SplitMethod::DegenerateSecondSpoke: return "degenerate-second-spoke";
    case SplitMethod::PrintedClosedForm: return "printed-closed-form";
    case SplitMethod::DerivedClosedForm: return "derived-closed-form";
    case SplitMethod::NumericSearch: return "numeric-search";
    case SplitMethod::OutsideRegion: return "outside-region";
  }
  return "unknown";
}

InterpolationSetup make_interpolation_setup(AlphabetSize q, double delta) {
  const int qi = q.value();
  const double qd = q.as_double();
  if (!(delta >= 0.0 && delta <= top_delta(q) + kConstraintSlack))
    throw DomainError("interpolated bound needs 0 <= delta <= 1 - 1/q");
  InterpolationSetup s;
  s.d = std::min(spoke_index_floor(q, delta), qi - 1);
  const double lambda = delta * qd - s.d;
  s.alpha = (std::abs(lambda) < 1e-9) ? 1.0 : std::clamp(1.0 - lambda, 0.0, 1.0);
  if (s.d == qi - 1) s.alpha = 1.0;
  s.k0 = qi - s.d;
  s.k1 = qi - s.d - 1;
  s.n0_weight = s.alpha * (1.0 - static_cast<double>(s.d) / qd);
  s.n1_weight = (1.0 - s.alpha) * (1.0 - static_cast<double>(s.d + 1) / qd);
  s.zero_gamma = s.n0_weight * (s.k0 - 1) + s.n1_weight * std::max(s.k1 - 1, 0);
  return s;
}

double interpolated_bound_at_split(AlphabetSize q, double gamma, double delta, double gamma0) {
  if (!(gamma >= 0.0)) throw DomainError("insertion rate must be nonnegative");
  if (!(gamma0 >= 0.0)) throw DomainError("gamma0 must be nonnegative");
  const InterpolationSetup s = make_interpolation_setup(q, delta);
  if (s.n1_weight == 0.0) {
    if (std::abs(s.n0_weight * gamma0 - gamma) > kConstraintSlack * std::max(1.0, gamma))
      throw DomainError("single-spoke split must route every insertion to the first spoke");
    return s.n0_weight * spoke_term(q, s.k0, gamma0);
  }
  // compare overspend in absolute budget units: n1_weight can be tiny next to a seam
  const double overspend = s.n0_weight * gamma0 - gamma;
  if (overspend > kConstraintSlack * std::max(1.0, gamma))
    throw DomainError("gamma0 leaves a negative insertion rate for the second spoke");
  double gamma1 = std::max(0.0, -overspend / s.n1_weight);
  // a unary second spoke only accepts gamma1 = 0; absorb rounding in the budget split
  if (s.k1 == 1 && gamma1 <= kConstraintSlack * std::max(1.0, gamma) / s.n1_weight) gamma1 = 0.0;
  return s.n0_weight * spoke_term(q, s.k0, gamma0) + s.n1_weight * spoke_term(q, s.k1, gamma1);
}

double stationarity_residual(const InterpolationSetup& setup, double gamma0, double gamma1) {
  const double lhs = (1.0 + 1.0 / gamma1) * (1.0 - 1.0 / setup.k1);
  const double rhs = (1.0 + 1.0 / gamma0) * (1.0 - 1.0 / setup.k0);
  return std::abs(lhs / rhs - 1.0);
}

std::optional<double> printed_optimal_gamma0(AlphabetSize q, double gamma, double delta) {
  const InterpolationSetup s = make_interpolation_setup(q, delta);
  const double a = s.alpha;
  const double d = s.d;
  const double Q = q.as_double();
  const double g = gamma;
  const double A = 3 * a * d * d * Q + d * d * Q - 3 * a * d * Q * Q - 2 * d * Q * Q + 4 * a * d * Q + 2 * d * Q +
                   a * Q * Q * Q - 2 * a * Q * Q + Q * Q * Q - 2 * Q * Q + g * Q + Q - a * d * d * d - 2 * a * d * d;
  const double B = a * d * d * d + 2 * a * d * d - 3 * a * d * d * Q - d * d * Q + 3 * a * d * Q * Q + 2 * d * Q * Q -
                   4 * a * d * Q - 2 * d * Q - a * Q * Q * Q + 2 * a * Q * Q - Q * Q * Q + 2 * Q * Q - g * Q - Q;
  const double C = 4 * (a * Q - a * d) * (g * d * d * Q - 2 * g * d * Q * Q + 2 * g * d * Q + g * Q * Q * Q - 2 * g * Q * Q);
  const double disc = B * B + C;
  if (disc < 0.0 || a == 0.0) return std::nullopt;
  return (A - std::sqrt(disc)) / (2 * a * (Q - d));
}

namespace {

// Positive root of alpha k g0^2 + (k(k-1)(k-2+alpha) - gamma q) g0 - gamma q (k-1)^2 = 0,
// the solution of the stationarity relation together with the budget constraint.
double derived_optimal_gamma0(const InterpolationSetup& s, double gamma, double q) {
  const double k = s.k0;
  const double lead = s.alpha * k;
  const double mid = k * (k - 1.0) * (k - 2.0 + s.alpha) - gamma * q;
  const double constant = gamma * q * (k - 1.0) * (k - 1.0);
  const double root = std::sqrt(mid * mid + 4.0 * lead * constant);
  if (mid >= 0.0) return 2.0 * constant / (mid + root);
  return (root - mid) / (2.0 * lead);
}

}  // namespace

GammaSplit optimal_gamma0(AlphabetSize q, double gamma, double delta) {
  ErrorPoint point(q, gamma, delta);
  const InterpolationSetup s = make_interpolation_setup(q, delta);
  GammaSplit out;
  out.upper = gamma / s.n0_weight;
  out.lower = std::max(0.0, (gamma - s.n1_weight * std::max(s.k1 - 1, 0)) / s.n0_weight);

  auto finish = [&](double g0, SplitMethod method) {
    out.gamma0 = g0;
    out.gamma1 = s.n1_weight > 0.0 ? std::max(0.0, (gamma - s.n0_weight * g0) / s.n1_weight) : 0.0;
    out.method = method;
    out.objective = interpolated_bound_at_split(q, gamma, delta, g0);
    return out;
  };

  if (gamma == 0.0) return finish(0.0, SplitMethod::NoInsertions);
  if (gamma >= s.zero_gamma) {
    // Both spokes can be driven to their zero crossings; any leftover budget is unused.
    out.gamma0 = s.k0 - 1;
    out.gamma1 = s.n1_weight > 0.0 ? (gamma - s.n0_weight * out.gamma0) / s.n1_weight : 0.0;
    out.method = SplitMethod::OutsideRegion;
    out.objective = 0.0;
    return out;
  }
  if (s.n1_weight == 0.0) return finish(out.upper, SplitMethod::SingleSpoke);
  if (s.k1 == 1) return finish(out.upper, SplitMethod::DegenerateSecondSpoke);

  auto accept = [&](double g0) -> std::optional<double> {
    if (!(g0 >= out.lower && g0 <= out.upper)) return std::nullopt;
    const double g1 = (gamma - s.n0_weight * g0) / s.n1_weight;
    if (!(g0 > 0.0 && g1 > 0.0)) return std::nullopt;
    const double r = stationarity_residual(s, g0, g1);
    if (r > kStationarityTolerance) return std::nullopt;
    return r;
  };

  out.printed_candidate = printed_optimal_gamma0(q, gamma, delta);
  if (out.printed_candidate) {
    if (auto r = accept(*out.printed_candidate)) {
      finish(*out.printed_candidate, SplitMethod::PrintedClosedForm);
      out.stationarity_residual = r;
      return out;
    }
  }
  const double derived = derived_optimal_gamma0(s, gamma, q.as_double());
  if (auto r = accept(derived)) {
    finish(derived, SplitMethod::DerivedClosedForm);
    out.stationarity_residual = r;
    return out;
  }

  const double hi = std::min(out.upper, static_cast<double>(s.k0 - 1));
  auto objective = [&](double g0) { return interpolated_bound_at_split(q, gamma, delta, g0); };
  const LineMinimum m = golden_section_minimize(objective, out.lower, hi, 1e-10);
  finish(m.x, SplitMethod::NumericSearch);
  if (out.gamma0 > 0.0 && out.gamma1 > 0.0) out.stationarity_residual = stationarity_residual(s, out.gamma0, out.gamma1);
  return out;
}

BoundValue interpolated_outer_bound(AlphabetSize q, double gamma, double delta) {
  ErrorPoint point(q, gamma, delta);
  if (delta > top_delta(q) + kConstraintSlack) throw DomainError("interpolated bound needs delta <= 1 - 1/q");
  const InterpolationSetup s = make_interpolation_setup(q, delta);
  if (gamma > 0.0 && gamma >= s.zero_gamma) {
    BoundValue out;
    out.source = BoundSource::InterpolatedOuter;
    out.feasible = in_resilience_closure(q, gamma, delta);
    if (out.feasible) out.raw = 0.0;
    return out;
  }
  const GammaSplit split = optimal_gamma0(q, gamma, delta);
  return make_bound(BoundSource::InterpolatedOuter, q, gamma, delta, split.objective);
}

CombinedBound combined_outer_bound_detail(AlphabetSize q, double gamma, double delta) {
  ErrorPoint point(q, gamma, delta);
  CombinedBound out;
  if (delta <= top_delta(q) + kConstraintSlack) {
    out.candidates.push_back(interpolated_outer_bound(q, gamma, std::min(delta, top_delta(q))));
  }
  out.candidates.push_back(linear_outer_bound(q, gamma, delta));
  if (delta == 0.0) out.candidates.push_back(insertion_only_bound(q, gamma));
  if (gamma == 0.0) out.candidates.push_back(deletion_only_piecewise_bound(q, delta));
  out.best = *std::min_element(out.candidates.begin(), out.candidates.end(),
                               [](const BoundValue& a, const BoundValue& b) { return a.rate < b.rate; });
  return out;
}

BoundValue combined_outer_bound(AlphabetSize q, double gamma, double delta) {
  return combined_outer_bound_detail(q, gamma, delta).best;
}

BoundValue evaluate_bound(BoundSource source, AlphabetSize q, double gamma, double delta) {
  const double qd = q.as_double();
  if (!(delta >= 0.0 && delta <= 1.0 - 1.0 / qd + 1e-12)) throw DomainError("delta must lie in [0, 1 - 1/q]");
  if (!(gamma >= 0.0 && gamma <= qd - 1.0)) throw DomainError("gamma must lie in [0, q - 1]");
  const auto outside = [source] {
    BoundValue v;
    v.source = source;
    return v;
  };
  switch (source) {
    case BoundSource::InsertionOnly: return insertion_only_bound(q, gamma);
    case BoundSource::DeletionOnly: return deletion_only_piecewise_bound(q, delta);
    case BoundSource::Spoke: {
      const double scaled = delta * qd;
      const double d = std::round(scaled);
      if (std::abs(scaled - d) > 1e-9) return outside();
      const double keep = 1.0 - d / qd;
      return spoke_bound(q, static_cast<int>(d), gamma / keep);
    }
    case BoundSource::FValue: {
      const double gmax = std::max(0.0, f_domain_gamma_max(q, std::min(delta, 1.0 - 1.0 / qd)));
      if (gamma > gmax) return outside();
      return make_bound(BoundSource::FValue, q, gamma, delta, f_value(q, gamma, delta));
    }
    case BoundSource::Inner: return inner_bound(q, gamma, delta);
    case BoundSource::LinearOuter: return linear_outer_bound(q, gamma, delta);
    case BoundSource::InterpolatedOuter: return interpolated_outer_bound(q, gamma, delta);
    case BoundSource::CombinedOuter: return combined_outer_bound(q, gamma, delta);
  }
  throw DomainError("unknown bound source");
}

}  // namespace insdel
