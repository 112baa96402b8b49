#pragma once

#include <cmath>
#include <utility>

namespace insdel {

struct LineMinimum {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
};

/// Golden-section search for the minimum of a unimodal function on [lo, hi].
///
/// Stops once the bracket is narrower than `tolerance`. Both endpoints are
/// compared against the interior estimate so a minimum sitting on the
/// boundary of the interval is returned exactly.
template <typename F>
LineMinimum golden_section_minimize(F&& f, double lo, double hi, double tolerance = 1e-10, int max_iterations = 500) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo;
  double b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int it = 0;
  while (b - a > tolerance && it < max_iterations) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++it;
  }
  LineMinimum best{0.5 * (a + b), f(0.5 * (a + b)), it};
  for (double edge : {lo, hi}) {
    const double fe = f(edge);
    if (fe < best.value) best = {edge, fe, it};
  }
  return best;
}

}  // namespace insdel
