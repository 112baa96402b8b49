#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "insdel/bounds.hpp"
#include "insdel/outer_bound.hpp"
#include "insdel/surface.hpp"

using namespace insdel;

TEST_CASE("linspace") {
  const auto xs = linspace(0.0, 4.0, 5);
  CHECK(xs == std::vector<double>{0, 1, 2, 3, 4});
  CHECK_THROWS_AS(linspace(0, 1, 1), DomainError);
}

TEST_CASE("grid shape and corner") {
  for (auto src : {BoundSource::Inner, BoundSource::LinearOuter, BoundSource::InterpolatedOuter,
                   BoundSource::CombinedOuter}) {
    const SurfaceGrid g = evaluate_surface(AlphabetSize(3), src, 7);
    CHECK(g.values.size() == 49);
    CHECK(g.gamma_axis.back() == 2.0);
    CHECK(g.delta_axis.back() == doctest::Approx(2.0 / 3));
    CHECK(g.at(0, 0).rate == 1.0);
    for (const auto& v : g.values) CHECK((v.rate >= 0.0 && v.rate <= 1.0));
  }
}

TEST_CASE("thread count does not change the grid") {
  const SurfaceGrid a = evaluate_surface(AlphabetSize(4), BoundSource::CombinedOuter, 23, 1);
  const SurfaceGrid b = evaluate_surface(AlphabetSize(4), BoundSource::CombinedOuter, 23, 5);
  REQUIRE(a.values.size() == b.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    CHECK(a.values[i].rate == b.values[i].rate);
    CHECK(a.values[i].source == b.values[i].source);
  }
}

TEST_CASE("projections of the q = 5 outer grid") {
  const SurfaceGrid g = evaluate_surface(AlphabetSize(5), BoundSource::CombinedOuter, 41);
  for (std::size_t j = 0; j < g.gamma_axis.size(); ++j)
    CHECK(g.at(0, j).rate == doctest::Approx(insertion_only_bound(AlphabetSize(5), g.gamma_axis[j]).rate).epsilon(1e-12));
  for (std::size_t i = 0; i < g.delta_axis.size(); ++i)
    CHECK(g.at(i, 0).rate ==
          doctest::Approx(deletion_only_piecewise_bound(AlphabetSize(5), g.delta_axis[i]).rate).epsilon(1e-12));
}

TEST_CASE("outer surfaces are monotone and dominate the inner surface") {
  for (int q = 2; q <= 8; ++q) {
    const SurfaceGrid in = evaluate_surface(AlphabetSize(q), BoundSource::Inner, 100);
    for (auto src : {BoundSource::LinearOuter, BoundSource::InterpolatedOuter, BoundSource::CombinedOuter}) {
      const SurfaceGrid g = evaluate_surface(AlphabetSize(q), src, 100);
      int bad = 0;
      for (std::size_t i = 0; i < 100; ++i)
        for (std::size_t j = 0; j < 100; ++j) {
          if (j + 1 < 100 && g.at(i, j + 1).rate > g.at(i, j).rate + 1e-9) ++bad;
          if (i + 1 < 100 && g.at(i + 1, j).rate > g.at(i, j).rate + 1e-9) ++bad;
          if (in.at(i, j).rate > g.at(i, j).rate + 1e-9) ++bad;
        }
      CHECK(bad == 0);
    }
  }
}

TEST_CASE("cells outside a bound's domain are flat zero and infeasible") {
  const SurfaceGrid g = evaluate_surface(AlphabetSize(4), BoundSource::FValue, 9);
  bool saw_outside = false;
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j)
      if (g.gamma_axis[j] > f_domain_gamma_max(AlphabetSize(4), g.delta_axis[i])) {
        saw_outside = true;
        CHECK(g.at(i, j).rate == 0.0);
        CHECK_FALSE(g.at(i, j).feasible);
      }
  CHECK(saw_outside);
}

TEST_CASE("csv round trip") {
  const SurfaceGrid g = evaluate_surface(AlphabetSize(5), BoundSource::CombinedOuter, 17);
  std::stringstream ss;
  write_csv(ss, g);
  std::string header;
  std::getline(std::stringstream(ss.str()), header);
  CHECK(header == "gamma,delta,rate,feasible,source");
  const SurfaceGrid r = read_csv(ss, AlphabetSize(5), BoundSource::CombinedOuter);
  REQUIRE(r.values.size() == g.values.size());
  for (std::size_t k = 0; k < 17; ++k) {
    CHECK(r.gamma_axis[k] == round_to_print_precision(g.gamma_axis[k]));
    CHECK(r.delta_axis[k] == round_to_print_precision(g.delta_axis[k]));
  }
  for (std::size_t k = 0; k < g.values.size(); ++k) {
    CHECK(r.values[k].rate == round_to_print_precision(g.values[k].rate));
    CHECK(r.values[k].feasible == g.values[k].feasible);
    CHECK(r.values[k].source == g.values[k].source);
  }
  // writing the parsed grid again reproduces the file byte for byte
  std::stringstream again;
  write_csv(again, r);
  std::stringstream first;
  write_csv(first, g);
  CHECK(again.str() == first.str());
}

TEST_CASE("json mirrors the grid") {
  const SurfaceGrid g = evaluate_surface(AlphabetSize(3), BoundSource::Inner, 5);
  std::stringstream ss;
  write_json(ss, g);
  const SurfaceGrid r = read_json(ss);
  CHECK(r.q == g.q);
  CHECK(r.source == BoundSource::Inner);
  CHECK(r.gamma_axis == g.gamma_axis);
  CHECK(r.delta_axis == g.delta_axis);
  for (std::size_t k = 0; k < g.values.size(); ++k) CHECK(r.values[k].rate == g.values[k].rate);
}

TEST_CASE("emit_surface writes a file") {
  const auto path = std::filesystem::temp_directory_path() / "insdel_test_surface.csv";
  const SurfaceGrid g = emit_surface(AlphabetSize(5), BoundSource::CombinedOuter, 12, SurfaceFormat::Csv, path);
  std::ifstream in(path);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 12 * 12 + 1);
  CHECK(g.values.size() == 144);
  std::filesystem::remove(path);
  CHECK_THROWS(emit_surface(AlphabetSize(5), BoundSource::Inner, 4, SurfaceFormat::Csv, "/nonexistent/dir/x.csv"));
  CHECK_THROWS_AS(parse_surface_format("xml"), DomainError);
}
