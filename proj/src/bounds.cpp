#include "insdel/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "insdel/geometry.hpp"

namespace insdel {

namespace {

// x ln x with the continuity limit at 0
double xlnx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

void require_unit_interval(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError(std::string(what) + " must lie in [0, 1]");
}

// Spoke term with a real-valued reduced alphabet k; lnq = ln q.
double spoke_term_real(double k, double x, double lnq) {
  if (x == 0.0) return std::log(k) / lnq;
  return ((1.0 + x) * std::log(k / (1.0 + x)) - x * std::log((k - 1.0) / x)) / lnq;
}

constexpr double kDomainSlack = 1e-12;

}  // namespace

double log_q(double x, AlphabetSize q) { return std::log(x) / std::log(q.as_double()); }

double q_ary_entropy(double x, AlphabetSize q) {
  require_unit_interval(x, "entropy argument");
  const double lnq = std::log(q.as_double());
  return (x * std::log(q.as_double() - 1.0) - xlnx(x) - xlnx(1.0 - x)) / lnq;
}

bool in_resilience_closure(AlphabetSize q, double gamma, double delta) {
  return contains_closure(build_polygon(q), {gamma, delta});
}

BoundValue make_bound(BoundSource source, AlphabetSize q, double gamma, double delta, double raw) {
  BoundValue out;
  out.source = source;
  out.raw = raw;
  out.rate = std::clamp(raw, 0.0, 1.0);
  out.feasible = out.rate > 0.0 || in_resilience_closure(q, gamma, delta);
  return out;
}

BoundValue insertion_only_bound(AlphabetSize q, double gamma) {
  const double qd = q.as_double();
  if (!(gamma >= 0.0 && gamma <= qd - 1.0))
    throw DomainError("insertion rate must lie in [0, q-1]");
  double raw = 1.0;
  if (gamma > 0.0) {
    raw = 1.0 - log_q(gamma + 1.0, q) - gamma * (log_q((gamma + 1.0) / gamma, q) - log_q(qd / (qd - 1.0), q));
  }
  return make_bound(BoundSource::InsertionOnly, q, gamma, 0.0, raw);
}

int spoke_index_floor(AlphabetSize q, double delta) {
  const double scaled = delta * q.as_double();
  const double nearest = std::round(scaled);
  if (std::abs(scaled - nearest) < 1e-9) return static_cast<int>(nearest);
  return static_cast<int>(std::floor(scaled));
}

BoundValue deletion_only_piecewise_bound(AlphabetSize q, double delta) {
  require_unit_interval(delta, "deletion rate");
  const int qi = q.value();
  const double qd = q.as_double();
  auto breakpoint = [&](int d) {
    const double dd = static_cast<double>(d) / qd;
    return (1.0 - dd) * (1.0 - log_q(1.0 / (1.0 - dd), q));
  };
  const int d = spoke_index_floor(q, delta);
  double raw = 0.0;
  if (d < qi - 1) {
    const double lambda = std::max(0.0, delta * qd - d);
    raw = lambda == 0.0 ? breakpoint(d) : (1.0 - lambda) * breakpoint(d) + lambda * breakpoint(d + 1);
  }
  return make_bound(BoundSource::DeletionOnly, q, 0.0, delta, raw);
}

double spoke_term(AlphabetSize q, int reduced_alphabet, double rescaled_gamma) {
  if (reduced_alphabet < 1 || reduced_alphabet > q.value())
    throw DomainError("reduced alphabet size must lie in [1, q]");
  if (!(rescaled_gamma >= 0.0)) throw DomainError("rescaled insertion rate must be nonnegative");
  if (reduced_alphabet == 1) {
    if (rescaled_gamma > 0.0)
      throw DegenerateSpokeError("a unary spoke cannot absorb insertions");
    return 0.0;
  }
  return spoke_term_real(reduced_alphabet, rescaled_gamma, std::log(q.as_double()));
}

BoundValue spoke_bound(AlphabetSize q, int d, double gamma_prime) {
  const int qi = q.value();
  if (d < 0 || d > qi - 1) throw DomainError("spoke index d must lie in [0, q-1]");
  if (!(gamma_prime >= 0.0)) throw DomainError("rescaled insertion rate must be nonnegative");
  const int k = qi - d;
  const double delta = static_cast<double>(d) / q.as_double();
  if (gamma_prime > static_cast<double>(k - 1)) {
    // Past the zero crossing of the spoke: the region boundary has been crossed.
    BoundValue out;
    out.source = BoundSource::Spoke;
    return out;
  }
  const double raw = (1.0 - delta) * spoke_term(q, k, gamma_prime);
  return make_bound(BoundSource::Spoke, q, gamma_prime * (1.0 - delta), delta, raw);
}

double f_domain_gamma_max(AlphabetSize q, double delta) {
  const double qd = q.as_double();
  return (1.0 - delta) * (qd - qd * delta - 1.0);
}

double f_value(AlphabetSize q, double gamma, double delta) {
  const double qd = q.as_double();
  if (!(delta >= 0.0 && delta <= 1.0 - 1.0 / qd + kDomainSlack))
    throw DomainError("f is defined for 0 <= delta <= 1 - 1/q");
  delta = std::min(delta, 1.0 - 1.0 / qd);
  const double gmax = std::max(0.0, f_domain_gamma_max(q, delta));
  if (!(gamma >= 0.0 && gamma <= gmax * (1.0 + kDomainSlack) + kDomainSlack))
    throw DomainError("f is defined for 0 <= gamma <= (1 - delta)(q - q delta - 1)");
  const double keep = 1.0 - delta;
  const double k = qd * keep;
  const double x = gamma / keep;
  if (x == 0.0) return keep * std::log(k) / std::log(qd);
  if (k - 1.0 <= 0.0) return 0.0;
  return keep * spoke_term_real(k, x, std::log(qd));
}

Hessian2 f_hessian(AlphabetSize q, double gamma, double delta) {
  const double qd = q.as_double();
  const double o = 1.0 - delta;
  const double m = qd - qd * delta - 1.0;
  if (!(delta >= 0.0 && m > 0.0)) throw DomainError("Hessian needs 0 <= delta < 1 - 1/q");
  if (!(gamma > 0.0 && gamma < o * m))
    throw DomainError("Hessian needs 0 < gamma < (1 - delta)(q - q delta - 1)");
  const double lnq = std::log(qd);
  const double s = o + gamma;
  Hessian2 h;
  h.h11 = o / (gamma * s * lnq);
  h.h12 = (gamma + o * o * qd) / (o * s * m * lnq);
  h.h21 = h.h12;
  h.h22 = (o * o * o * qd * qd * (o + 2.0 * gamma) + (2.0 * o * qd - 1.0) * (gamma * gamma - gamma * o - o * o)) /
          (o * o * s * m * m * lnq);
  return h;
}

BoundValue inner_bound(AlphabetSize q, double gamma, double delta) {
  const double qd = q.as_double();
  if (!(delta >= 0.0 && delta <= 1.0 - 1.0 / qd + kDomainSlack))
    throw DomainError("inner bound needs 0 <= delta <= 1 - 1/q");
  if (!(gamma >= 0.0 && gamma <= qd - 1.0)) throw DomainError("inner bound needs 0 <= gamma <= q - 1");
  const double s = 1.0 - delta + gamma;
  const double raw = 1.0 - s * q_ary_entropy(gamma / s, q) - q_ary_entropy(delta, q) + gamma * log_q(qd - 1.0, q);
  return make_bound(BoundSource::Inner, q, gamma, delta, raw);
}

}  // namespace insdel
