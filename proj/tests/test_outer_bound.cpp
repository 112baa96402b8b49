#include <doctest.h>

#include <cmath>

#include "insdel/bounds.hpp"
#include "insdel/geometry.hpp"
#include "insdel/golden_section.hpp"
#include "insdel/outer_bound.hpp"
#include "reference.hpp"

using namespace insdel;

namespace {
double lg(double x, int q) { return std::log(x) / std::log(q); }
}  // namespace

TEST_CASE("golden section") {
  const auto m = golden_section_minimize([](double x) { return (x - 0.3) * (x - 0.3); }, 0.0, 1.0);
  CHECK(m.x == doctest::Approx(0.3).epsilon(1e-9));
  const auto edge = golden_section_minimize([](double x) { return x; }, 0.25, 2.0);
  CHECK(edge.x == 0.25);
}

TEST_CASE("interpolation setup") {
  const auto s = make_interpolation_setup(AlphabetSize(5), 0.3);
  CHECK(s.d == 1);
  CHECK(s.alpha == doctest::Approx(0.5));
  CHECK(s.k0 == 4);
  CHECK(s.k1 == 3);
  CHECK(s.n0_weight == doctest::Approx(0.4));
  CHECK(s.n1_weight == doctest::Approx(0.3));
  CHECK(s.zero_gamma == doctest::Approx(0.4 * 3 + 0.3 * 2));
  const auto spoke = make_interpolation_setup(AlphabetSize(5), 0.4);
  CHECK(spoke.d == 2);
  CHECK(spoke.alpha == 1.0);
  CHECK(spoke.n1_weight == 0.0);
}

TEST_CASE("two-spoke value at a split") {
  const double v = interpolated_bound_at_split(AlphabetSize(5), 0.0, 0.3, 0.0);
  CHECK(v == doctest::Approx(0.5 * 0.8 * lg(4, 5) + 0.5 * 0.6 * lg(3, 5)));
  // the convex combination of the gamma = 0 spokes at d = 1 and d = 2
  CHECK(v == doctest::Approx(0.5 * spoke_bound(AlphabetSize(5), 1, 0).rate + 0.5 * spoke_bound(AlphabetSize(5), 2, 0).rate));
  CHECK(interpolated_bound_at_split(AlphabetSize(5), 0.5, 0.3, 0.4) ==
        doctest::Approx(static_cast<double>(ref::parametrized(5, 0.5, 0.3, 0.4))).epsilon(1e-13));
  CHECK_THROWS_AS(interpolated_bound_at_split(AlphabetSize(5), 0.5, 0.3, 2.0), DomainError);
  CHECK_THROWS_AS(interpolated_bound_at_split(AlphabetSize(5), 0.5, 0.4, 0.5), DomainError);
  // second spoke with a single symbol left cannot take insertions
  CHECK_THROWS_AS(interpolated_bound_at_split(AlphabetSize(3), 0.3, 0.5, 0.0), DegenerateSpokeError);
}

TEST_CASE("printed closed form is never admissible") {
  for (int q = 3; q <= 8; ++q)
    for (double g : {0.05, 0.2, 0.6})
      for (double d : {0.05, 0.15}) {
        const auto c = printed_optimal_gamma0(AlphabetSize(q), g, d);
        REQUIRE(c.has_value());
        CHECK(*c < 0.0);
      }
}

TEST_CASE("optimal gamma0") {
  const GammaSplit none = optimal_gamma0(AlphabetSize(5), 0.0, 0.3);
  CHECK(none.gamma0 == 0.0);
  CHECK(none.gamma1 == 0.0);
  CHECK(none.method == SplitMethod::NoInsertions);

  const GammaSplit single = optimal_gamma0(AlphabetSize(5), 0.3, 0.4);
  CHECK(single.method == SplitMethod::SingleSpoke);
  CHECK(single.gamma0 == doctest::Approx(0.3 / 0.6));

  const GammaSplit s = optimal_gamma0(AlphabetSize(5), 0.5, 0.3);
  CHECK(s.method == SplitMethod::DerivedClosedForm);
  REQUIRE(s.stationarity_residual.has_value());
  CHECK(*s.stationarity_residual < 1e-9);
  CHECK(0.4 * s.gamma0 + 0.3 * s.gamma1 == doctest::Approx(0.5));
  // grid search oracle
  double best = 0, bv = 1e9;
  for (double g0 = s.lower; g0 <= std::min(s.upper, 3.0); g0 += 1e-6) {
    const double v = static_cast<double>(ref::parametrized(5, 0.5, 0.3, g0));
    if (v < bv) bv = v, best = g0;
  }
  CHECK(std::abs(best - s.gamma0) < 1e-6);

  const GammaSplit degenerate = optimal_gamma0(AlphabetSize(3), 0.1, 0.5);
  CHECK(degenerate.method == SplitMethod::DegenerateSecondSpoke);
  CHECK(degenerate.gamma1 == 0.0);

  const GammaSplit outside = optimal_gamma0(AlphabetSize(5), 3.5, 0.3);
  CHECK(outside.method == SplitMethod::OutsideRegion);
  CHECK(outside.objective == 0.0);
}

TEST_CASE("interpolated outer bound") {
  CHECK(interpolated_outer_bound(AlphabetSize(5), 0.0, 0.4).rate == doctest::Approx(0.6 * lg(3, 5)));
  CHECK(interpolated_outer_bound(AlphabetSize(5), 0.0, 0.4).rate == doctest::Approx(0.4096).epsilon(1e-4));
  CHECK(interpolated_outer_bound(AlphabetSize(2), 0.0, 0.25).rate == doctest::Approx(0.5));
  CHECK(interpolated_outer_bound(AlphabetSize(2), 0.0, 0.25).rate ==
        doctest::Approx(deletion_only_piecewise_bound(AlphabetSize(2), 0.25).rate));
  // spokes reproduce spoke_bound exactly
  for (int d = 0; d < 4; ++d)
    for (double g : {0.0, 0.2, 0.9}) {
      const double delta = d / 5.0;
      const double keep = 1 - delta;
      CHECK(interpolated_outer_bound(AlphabetSize(5), g, delta).rate ==
            doctest::Approx(spoke_bound(AlphabetSize(5), d, g / keep).rate).epsilon(1e-14));
    }
  // on the F_q chain
  CHECK(interpolated_outer_bound(AlphabetSize(5), 1.2, 0.4).rate <= 1e-6);
  CHECK(interpolated_outer_bound(AlphabetSize(5), 0.8, 0.5).rate <= 1e-6);
  const BoundValue past = interpolated_outer_bound(AlphabetSize(5), 3.0, 0.5);
  CHECK(past.rate == 0.0);
  CHECK_FALSE(past.feasible);
  CHECK_THROWS_AS(interpolated_outer_bound(AlphabetSize(5), 0.0, 0.9), DomainError);
}

TEST_CASE("interpolated bound is continuous across seams") {
  for (int q = 3; q <= 8; ++q)
    for (int d = 1; d < q - 1; ++d)
      for (double g : {0.0, 0.1, 0.5, 1.0}) {
        const double s = static_cast<double>(d) / q;
        const double a = interpolated_outer_bound(AlphabetSize(q), g, s - 1e-7).rate;
        const double b = interpolated_outer_bound(AlphabetSize(q), g, s + 1e-7).rate;
        CHECK(std::abs(a - b) <= 1e-6);
      }
}

TEST_CASE("combined outer bound") {
  for (int q = 2; q <= 6; ++q) CHECK(combined_outer_bound(AlphabetSize(q), 0, 0).rate == 1.0);
  const auto detail = combined_outer_bound_detail(AlphabetSize(5), 1.3, 0.33);
  CHECK(detail.candidates.size() == 2);
  for (const auto& c : detail.candidates) CHECK(detail.best.rate <= c.rate);
  CHECK(combined_outer_bound_detail(AlphabetSize(5), 1.3, 0.0).candidates.size() == 3);
  CHECK(combined_outer_bound_detail(AlphabetSize(5), 0.0, 0.3).candidates.size() == 3);
  // never above the linear bound, never below the inner bound
  for (int q = 2; q <= 6; ++q)
    for (int i = 0; i <= 10; ++i)
      for (int j = 0; j <= 10; ++j) {
        const double g = (q - 1.0) * i / 10, d = (1 - 1.0 / q) * j / 10;
        const double c = combined_outer_bound(AlphabetSize(q), g, d).rate;
        CHECK(c <= linear_outer_bound(AlphabetSize(q), g, d).rate);
        CHECK(c >= inner_bound(AlphabetSize(q), g, d).rate - 1e-9);
      }
  // beyond 1 - 1/q only the linear bound applies
  CHECK(combined_outer_bound(AlphabetSize(3), 0.0, 0.9).source == BoundSource::LinearOuter);
}

TEST_CASE("evaluate_bound dispatch") {
  const AlphabetSize q(5);
  CHECK(evaluate_bound(BoundSource::Spoke, q, 0.0, 0.4).rate == doctest::Approx(0.6 * lg(3, 5)));
  const BoundValue off = evaluate_bound(BoundSource::Spoke, q, 0.0, 0.45);
  CHECK(off.rate == 0.0);
  CHECK_FALSE(off.raw.has_value());
  CHECK_FALSE(off.feasible);
  CHECK(evaluate_bound(BoundSource::InsertionOnly, q, 1.0, 0.3).rate == insertion_only_bound(q, 1.0).rate);
  CHECK(evaluate_bound(BoundSource::DeletionOnly, q, 1.0, 0.3).rate == deletion_only_piecewise_bound(q, 0.3).rate);
  CHECK(evaluate_bound(BoundSource::FValue, q, 0.5, 0.2).rate == doctest::Approx(f_value(q, 0.5, 0.2)));
  CHECK_FALSE(evaluate_bound(BoundSource::FValue, q, 3.9, 0.2).raw.has_value());
  CHECK_THROWS_AS(evaluate_bound(BoundSource::Inner, q, 0.0, 0.9), DomainError);
}
