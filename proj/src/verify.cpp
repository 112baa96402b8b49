#include "insdel/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>

#include "insdel/bounds.hpp"
#include "insdel/geometry.hpp"
#include "insdel/monte_carlo.hpp"
#include "insdel/oracles.hpp"
#include "insdel/outer_bound.hpp"
#include "insdel/surface.hpp"

namespace insdel {

namespace {

using Check = std::function<std::string()>;  // empty string on success

SuiteResult run(const std::string& name, const Check& check) {
  SuiteResult r;
  r.name = name;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.detail = check();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string where(int q, double gamma, double delta, double got, double want) {
  std::ostringstream os;
  os.precision(15);
  os << "q=" << q << " gamma=" << gamma << " delta=" << delta << ": " << got << " vs " << want;
  return os.str();
}

}  // namespace

std::vector<SuiteResult> run_invariant_suites(bool quick) {
  const int res = quick ? 30 : 100;
  std::vector<SuiteResult> out;

  out.push_back(run("projections", [&] {
    for (int qi = 2; qi <= 8; ++qi) {
      const AlphabetSize q(qi);
      for (int i = 0; i <= res; ++i) {
        const double g = (qi - 1.0) * i / res;
        const double got = combined_outer_bound(q, g, 0.0).rate;
        const double want = insertion_only_bound(q, g).rate;
        if (std::abs(got - want) > 1e-12) return where(qi, g, 0.0, got, want);
      }
      for (int d = 0; d < qi; ++d) {
        const double got = combined_outer_bound(q, 0.0, d / static_cast<double>(qi)).rate;
        const double want = deletion_only_piecewise_bound(q, d / static_cast<double>(qi)).rate;
        if (std::abs(got - want) > 1e-12) return where(qi, 0.0, d / static_cast<double>(qi), got, want);
      }
    }
    return std::string();
  }));

  out.push_back(run("zero set", [&] {
    for (int qi = 2; qi <= 8; ++qi) {
      const AlphabetSize q(qi);
      const ResiliencePolygon poly = build_polygon(q);
      for (const PlanePoint& v : poly.vertices()) {
        if (v.gamma == 0.0 && v.delta == 0.0) continue;
        const double r = interpolated_outer_bound(q, v.gamma, std::min(v.delta, 1.0 - 1.0 / qi)).rate;
        if (r > 1e-6) return where(qi, v.gamma, v.delta, r, 0.0);
      }
    }
    return std::string();
  }));

  out.push_back(run("outer above inner", [&] {
    for (int qi = 2; qi <= 8; ++qi) {
      const auto inner = evaluate_surface(AlphabetSize(qi), BoundSource::Inner, res);
      const auto outer = evaluate_surface(AlphabetSize(qi), BoundSource::CombinedOuter, res);
      for (std::size_t k = 0; k < inner.values.size(); ++k)
        if (inner.values[k].rate > outer.values[k].rate + 1e-9)
          return where(qi, inner.gamma_axis[k % res], inner.delta_axis[k / res], outer.values[k].rate,
                       inner.values[k].rate);
    }
    return std::string();
  }));

  out.push_back(run("monotone outer surface", [&] {
    for (int qi = 2; qi <= 8; ++qi) {
      const auto g = evaluate_surface(AlphabetSize(qi), BoundSource::CombinedOuter, res);
      for (int i = 0; i < res; ++i)
        for (int j = 0; j < res; ++j) {
          const double r = g.at(i, j).rate;
          if (j + 1 < res && g.at(i, j + 1).rate > r + 1e-9)
            return where(qi, g.gamma_axis[j + 1], g.delta_axis[i], g.at(i, j + 1).rate, r);
          if (i + 1 < res && g.at(i + 1, j).rate > r + 1e-9)
            return where(qi, g.gamma_axis[j], g.delta_axis[i + 1], g.at(i + 1, j).rate, r);
        }
    }
    return std::string();
  }));

  out.push_back(run("f convexity", [&] {
    for (int qi = 2; qi <= 8; ++qi) {
      const AlphabetSize q(qi);
      for (int a = 1; a < res; ++a)
        for (int b = 1; b < res; ++b) {
          const double delta = (1.0 - 1.0 / qi) * b / res;
          const double gamma = f_domain_gamma_max(q, delta) * a / res;
          const Hessian2 h = f_hessian(q, gamma, delta);
          if (h.trace() < -1e-9 || h.determinant() < -1e-9 || h.discriminant() < -1e-9)
            return where(qi, gamma, delta, h.determinant(), 0.0);
        }
    }
    return std::string();
  }));

  out.push_back(run("supersequence counts", [&] {
    const int nmax = quick ? 4 : 5;
    for (int qi = 2; qi <= 3; ++qi) {
      const AlphabetSize q(qi);
      for (int n = 0; n <= nmax; ++n)
        for (int t = 0; t <= 2; ++t) {
          const BigInt want = supersequence_count_exact_length(n, t, q);
          std::string fail;
          for_each_word(q, static_cast<std::size_t>(n), [&](const Word& w) {
            if (!fail.empty()) return;
            BallSpec spec{w, t, 0, LengthMode::ExactFinalLength};
            if (BigInt(enumerate_ball(spec).size()) != want)
              fail = "center " + format_word(w) + " t=" + std::to_string(t);
          });
          if (!fail.empty()) return fail;
        }
    }
    return std::string();
  }));

  out.push_back(run("containment probability", [&] {
    const int kmax = quick ? 3 : 4;
    for (int qi = 2; qi <= 3; ++qi)
      for (int k = 0; k <= kmax; ++k)
        for_each_word(AlphabetSize(qi), static_cast<std::size_t>(k), [&](const Word& y) {
          for (int m = k; m <= 7; ++m) (void)containment_probability(y, m);  // throws on mismatch
        });
    return std::string();
  }));

  out.push_back(run("monte carlo determinism", [&] {
    McConfig cfg;
    cfg.q = 2;
    cfg.n = 8;
    cfg.delta = 0.25;
    cfg.rate_target = 0.25;
    cfg.list_cap = 4;
    cfg.trials = 3;
    cfg.seed = 12345;
    if (!(run_inner_bound_mc(cfg) == run_inner_bound_mc(cfg))) return std::string("reports differ");
    return std::string();
  }));

  return out;
}

}  // namespace insdel
