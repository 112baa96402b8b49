#pragma once

#include <array>

#include "insdel/types.hpp"

namespace insdel {

/// Index d of the spoke band containing delta: floor(delta * q), snapped to
/// the nearest integer when delta * q is within 1e-9 of it.
int spoke_index_floor(AlphabetSize q, double delta);

/// log base q via natural-log ratio.
double log_q(double x, AlphabetSize q);

/// q-ary entropy x log_q(q-1) - x log_q x - (1-x) log_q(1-x), with 0 log 0 := 0.
double q_ary_entropy(double x, AlphabetSize q);

/// Rate limit for codes list-decodable from a gamma fraction of insertions only.
BoundValue insertion_only_bound(AlphabetSize q, double gamma);

/// Time-sharing bound for deletions only: the alphabet-reduction values
/// (1 - d/q) log_q(q - d) at delta = d/q joined by straight lines; 0 from 1 - 1/q on.
BoundValue deletion_only_piecewise_bound(AlphabetSize q, double delta);

/// Value of one spoke term g_k(x) = (1+x) log_q(k/(1+x)) - x log_q((k-1)/x)
/// for a reduced alphabet of k symbols and rescaled insertion rate x >= 0.
///
/// g_k is convex with its minimum 0 at x = k - 1; k = 1 is only defined at x = 0.
double spoke_term(AlphabetSize q, int reduced_alphabet, double rescaled_gamma);

/// Outer bound at deletion rate d/q; gamma_prime = gamma / (1 - d/q).
///
/// Past the zero crossing (gamma_prime > q-d-1) the formula stops being a
/// bound; the result is rate 0, infeasible, with no raw value.
BoundValue spoke_bound(AlphabetSize q, int d, double gamma_prime);

/// Upper end of the convexity domain: (1 - delta)(q - q delta - 1).
double f_domain_gamma_max(AlphabetSize q, double delta);

/// The continuous extension f(gamma, delta) of the spoke family.
/// Domain: 0 <= delta <= 1 - 1/q, 0 <= gamma <= (1 - delta)(q - q delta - 1).
double f_value(AlphabetSize q, double gamma, double delta);

/// Symmetric 2x2 matrix, row-major [[h11, h12], [h12, h22]].
struct Hessian2 {
  double h11 = 0.0;
  double h12 = 0.0;
  double h21 = 0.0;
  double h22 = 0.0;

  double trace() const noexcept { return h11 + h22; }
  double determinant() const noexcept { return h11 * h22 - h12 * h21; }
  /// trace^2 - 4 det; nonnegative iff the eigenvalues are real.
  double discriminant() const noexcept { return trace() * trace() - 4.0 * determinant(); }
};

/// Closed-form Hessian of f over (gamma, delta); strict interior of the domain only.
Hessian2 f_hessian(AlphabetSize q, double gamma, double delta);

/// Random-coding achievability bound; 0 <= delta <= 1 - 1/q, 0 <= gamma <= q - 1.
BoundValue inner_bound(AlphabetSize q, double gamma, double delta);

/// Whether (gamma, delta) lies in the closure of the zero-rate region F_q.
bool in_resilience_closure(AlphabetSize q, double gamma, double delta);

/// Builds a BoundValue from a raw formula value using the clamping convention.
BoundValue make_bound(BoundSource source, AlphabetSize q, double gamma, double delta, double raw);

}  // namespace insdel
