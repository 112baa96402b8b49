#pragma once

#include <cstdint>

namespace insdel {

/// SplitMix64 (Steele, Lea, Flood 2014).
///
///   state += 0x9E3779B97F4A7C15
///   z = state
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
///
/// Streams split deterministically: child i of seed s is seeded with
/// mix(s + (i + 1) * 0x9E3779B97F4A7C15), where mix is the output function
/// above. Bounded draws use rejection so every implementation of this rule
/// reproduces the same sequence.
class SplitMix64 {
public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() noexcept {
    state_ += kGolden;
    return mix(state_);
  }

  std::uint64_t operator()() noexcept { return next(); }
  static constexpr std::uint64_t min() noexcept { return 0; }
  static constexpr std::uint64_t max() noexcept { return ~std::uint64_t{0}; }

  /// Uniform integer in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept {
    // reject the low (2^64 mod bound) values
    const std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  /// Independent child stream number `index`.
  SplitMix64 split(std::uint64_t index) const noexcept { return SplitMix64(mix(state_ + (index + 1) * kGolden)); }

private:
  std::uint64_t state_;
};

}  // namespace insdel
