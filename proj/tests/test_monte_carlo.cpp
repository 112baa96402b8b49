#include <doctest.h>

#include <vector>

#include "insdel/bounds.hpp"
#include "insdel/monte_carlo.hpp"
#include "insdel/rng.hpp"


using namespace insdel;

TEST_CASE("splitmix64 reference values") {
  // first outputs for seed 0 (published reference sequence)
  SplitMix64 g(0);
  CHECK(g.next() == 0xE220A8397B1DCDAFULL);
  CHECK(g.next() == 0x6E789E6AA1B965F4ULL);
  CHECK(g.next() == 0x06C45D188009454FULL);
}

TEST_CASE("bounded draws and splitting") {
  SplitMix64 g(42);
  std::vector<int> counts(6, 0);
  for (int i = 0; i < 60000; ++i) ++counts[g.below(6)];
  for (int c : counts) CHECK(c == doctest::Approx(10000).epsilon(0.05));
  const SplitMix64 root(9);
  SplitMix64 a = root.split(0), b = root.split(0), c = root.split(1);
  CHECK(a.next() == b.next());
  CHECK(a.next() != c.next());
}

TEST_CASE("single-codeword code never violates") {
  McConfig cfg;
  cfg.q = 2;
  cfg.n = 6;
  cfg.delta = 0.5;
  cfg.gamma = 0.5;
  cfg.rate_target = 0.0;
  cfg.list_cap = 1;
  cfg.trials = 3;
  const McReport r = run_inner_bound_mc(cfg);
  CHECK(r.codewords_per_code == 1);
  CHECK(r.max_list_size == 1);
  CHECK(r.violations == 0);
}

TEST_CASE("reports are pure functions of the configuration") {
  McConfig cfg;
  cfg.q = 3;
  cfg.n = 5;
  cfg.delta = 0.2;
  cfg.gamma = 0.2;
  cfg.rate_target = 0.4;
  cfg.list_cap = 2;
  cfg.trials = 4;
  cfg.seed = 77;
  const McReport a = run_inner_bound_mc(cfg);
  CHECK(a == run_inner_bound_mc(cfg));
  cfg.received_samples = 50;
  const McReport s = run_inner_bound_mc(cfg);
  CHECK(s == run_inner_bound_mc(cfg));
  CHECK(s.words_sampled == 200);
  cfg.seed = 78;
  cfg.received_samples = 0;
  // a different seed draws different codes; the exhaustive word count stays the same
  CHECK(run_inner_bound_mc(cfg).words_sampled == a.words_sampled);
}

TEST_CASE("half the inner bound at q = 2, n = 12") {
  McConfig cfg;
  cfg.q = 2;
  cfg.n = 12;
  cfg.delta = 0.25;
  cfg.rate_target = 0.5 * inner_bound(AlphabetSize(2), 0.0, 0.25).rate;
  cfg.list_cap = 8;
  cfg.trials = 20;
  cfg.seed = 1;
  const McReport r = run_inner_bound_mc(cfg);
  CHECK(r.violations == 0);
  CHECK(r.max_deletions == 3);
  CHECK(r.max_insertions == 0);
}

TEST_CASE("too many codewords is a budget error") {
  McConfig cfg;
  cfg.q = 4;
  cfg.n = 20;
  cfg.rate_target = 0.9;
  CHECK_THROWS_AS(run_inner_bound_mc(cfg), BudgetError);
  cfg.rate_target = 1.5;
  CHECK_THROWS_AS(run_inner_bound_mc(cfg), DomainError);
}

TEST_CASE("json round trip of the configuration") {
  const McConfig cfg = mc_config_from_json(R"({"q": 3, "n": 7, "rate_target": 0.25, "list_cap": 4,
                                                "trials": 9, "seed": 18446744073709551615, "delta": 0.1})");
  CHECK(cfg.q == 3);
  CHECK(cfg.n == 7);
  CHECK(cfg.list_cap == 4);
  CHECK(cfg.trials == 9);
  CHECK(cfg.seed == 18446744073709551615ULL);
  CHECK(cfg.delta == 0.1);
  const std::string j = mc_report_to_json(cfg, McReport{});
  CHECK(j.find("\"violations\": 0") != std::string::npos);
}
