#pragma once

#include <cstdint>
#include <string>

#include "insdel/types.hpp"

namespace insdel {

struct McConfig {
  int q = 2;
  int n = 12;
  double gamma = 0.0;
  double delta = 0.0;
  /// codes have q^ceil(rate_target * n) codewords
  double rate_target = 0.0;
  int list_cap = 1;
  int trials = 1;
  std::uint64_t seed = 0;
  /// 0: exhaustive over all received words; otherwise received words sampled per trial
  int received_samples = 0;
};

struct McReport {
  int trials = 0;
  int violations = 0;
  std::size_t max_list_size = 0;
  std::size_t words_sampled = 0;
  std::size_t codewords_per_code = 0;
  int max_deletions = 0;
  int max_insertions = 0;

  friend bool operator==(const McReport&, const McReport&) = default;
};

/// Samples uniformly random codes at the target rate and measures their largest
/// decoding lists. A trial is a violation when some received word has more than
/// list_cap codewords within the error budget. The report is a pure function of cfg.
McReport run_inner_bound_mc(const McConfig& cfg);

McConfig mc_config_from_json(const std::string& text);
std::string mc_report_to_json(const McConfig& cfg, const McReport& report);

}  // namespace insdel
