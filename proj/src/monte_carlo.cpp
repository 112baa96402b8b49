#include "insdel/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <nlohmann/json.hpp>

#include "insdel/oracles.hpp"
#include "insdel/rng.hpp"

namespace insdel {

namespace {

Word random_word(AlphabetSize q, std::size_t length, SplitMix64& rng) {
  std::vector<Symbol> s(length);
  for (auto& x : s) x = static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(q.value())));
  return Word(q, std::move(s));
}

// A received word: a random codeword hit by random deletions, then random insertions.
Word corrupt(const Word& x, int max_del, int max_ins, SplitMix64& rng) {
  std::vector<Symbol> s = x.symbols();
  const auto dels = static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min<std::size_t>(max_del, s.size()) + 1)));
  for (int i = 0; i < dels; ++i) s.erase(s.begin() + static_cast<std::ptrdiff_t>(rng.below(s.size())));
  const auto ins = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_ins) + 1));
  for (int i = 0; i < ins; ++i) {
    const auto pos = rng.below(s.size() + 1);
    s.insert(s.begin() + static_cast<std::ptrdiff_t>(pos), static_cast<Symbol>(rng.below(static_cast<std::uint64_t>(x.q().value()))));
  }
  return Word(x.q(), std::move(s));
}

}  // namespace

McReport run_inner_bound_mc(const McConfig& cfg) {
  const AlphabetSize q(cfg.q);
  if (cfg.n < 1) throw DomainError("block length must be positive");
  if (cfg.trials < 0) throw DomainError("trial count must be nonnegative");
  if (!(cfg.rate_target >= 0.0 && cfg.rate_target <= 1.0)) throw DomainError("target rate must lie in [0, 1]");
  if (!(cfg.gamma >= 0.0 && cfg.delta >= 0.0 && cfg.delta <= 1.0)) throw DomainError("invalid error rates");
  const double cap = enumeration_cap();
  const auto info_symbols = static_cast<int>(std::ceil(cfg.rate_target * cfg.n - 1e-9));
  const double codewords = std::pow(cfg.q, info_symbols);
  if (codewords > cap) throw BudgetError("code size exceeds the enumeration budget", codewords, cap);
  if (codewords > std::pow(cfg.q, cfg.n)) throw DomainError("target rate exceeds 1");

  McReport report;
  report.trials = cfg.trials;
  report.codewords_per_code = static_cast<std::size_t>(codewords);
  report.max_deletions = static_cast<int>(std::floor(cfg.delta * cfg.n + 1e-9));
  report.max_insertions = static_cast<int>(std::floor(cfg.gamma * cfg.n + 1e-9));

  const SplitMix64 root(cfg.seed);
  for (int t = 0; t < cfg.trials; ++t) {
    SplitMix64 rng = root.split(static_cast<std::uint64_t>(t));
    std::set<Word> distinct;
    std::vector<Word> words;
    while (words.size() < report.codewords_per_code) {
      Word w = random_word(q, static_cast<std::size_t>(cfg.n), rng);
      if (distinct.insert(w).second) words.push_back(std::move(w));
    }
    SmallCode code(q, std::move(words));

    std::size_t worst = 0;
    if (cfg.received_samples == 0) {
      MaxListSize m = max_list_size(code, report.max_deletions, report.max_insertions, cap);
      worst = m.size;
      report.words_sampled += m.words_checked;
    } else {
      for (int s = 0; s < cfg.received_samples; ++s) {
        const Word& sent = code.codewords()[rng.below(code.size())];
        Word w = corrupt(sent, report.max_deletions, report.max_insertions, rng);
        std::size_t count = 0;
        for (const Word& x : code.codewords())
          if (reachable(x, w, report.max_deletions, report.max_insertions)) ++count;
        worst = std::max(worst, count);
      }
      report.words_sampled += static_cast<std::size_t>(cfg.received_samples);
    }
    report.max_list_size = std::max(report.max_list_size, worst);
    if (worst > static_cast<std::size_t>(cfg.list_cap)) ++report.violations;
  }
  return report;
}

McConfig mc_config_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  McConfig cfg;
  cfg.q = j.value("q", cfg.q);
  cfg.n = j.value("n", cfg.n);
  cfg.gamma = j.value("gamma", cfg.gamma);
  cfg.delta = j.value("delta", cfg.delta);
  cfg.rate_target = j.value("rate_target", cfg.rate_target);
  cfg.list_cap = j.value("list_cap", cfg.list_cap);
  cfg.trials = j.value("trials", cfg.trials);
  cfg.seed = j.value("seed", cfg.seed);
  cfg.received_samples = j.value("received_samples", cfg.received_samples);
  return cfg;
}

std::string mc_report_to_json(const McConfig& cfg, const McReport& report) {
  nlohmann::ordered_json j;
  j["config"] = {{"q", cfg.q},
                 {"n", cfg.n},
                 {"gamma", cfg.gamma},
                 {"delta", cfg.delta},
                 {"rate_target", cfg.rate_target},
                 {"list_cap", cfg.list_cap},
                 {"trials", cfg.trials},
                 {"seed", cfg.seed},
                 {"received_samples", cfg.received_samples}};
  j["trials"] = report.trials;
  j["violations"] = report.violations;
  j["max_list_size"] = report.max_list_size;
  j["words_sampled"] = report.words_sampled;
  j["codewords_per_code"] = report.codewords_per_code;
  j["max_deletions"] = report.max_deletions;
  j["max_insertions"] = report.max_insertions;
  return j.dump(2);
}

}  // namespace insdel
