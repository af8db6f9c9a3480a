#pragma once

#include <cstdint>

namespace cascade {

/// SplitMix64 generator. Small state, so one instance per Monte Carlo sample
/// is cheap, and its output is identical on every platform.
class SplitMix64 {
public:
  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    return finalize(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double next_unit() noexcept {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in the open interval (0, 1).
  constexpr double next_open_unit() noexcept {
    return (static_cast<double>(next() >> 12) + 0.5) * 0x1.0p-52;
  }

  static constexpr std::uint64_t finalize(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

private:
  std::uint64_t state_;
};

/// Per-sample stream seed: finalize(master + (index + 1) * golden gamma).
/// Samples seeded this way are independent of how work is scheduled.
constexpr std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) noexcept {
  return SplitMix64::finalize(master + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

/// Default master seed for census and measure runs.
inline constexpr std::uint64_t kDefaultSeed = 0x5EEDCA5CADEULL;

}  // namespace cascade
