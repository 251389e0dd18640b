#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace netmetric {

/// SplitMix64 (Steele, Lea & Flood). The state is a plain counter advanced by
/// the golden-ratio increment 0x9E3779B97F4A7C15; each output is the counter
/// passed through the finalizer
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z =  z ^ (z >> 31)
/// so any language reproduces the stream bit-for-bit.
class SplitMix64 {
 public:
  static constexpr std::uint64_t kIncrement = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t next() noexcept {
    state_ += kIncrement;
    return mix(state_);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1].
  double uniform_pos() noexcept { return 1.0 - uniform(); }

  /// Uniform integer in [0, bound); bound > 0. Uses Lemire's multiply-shift
  /// without rejection (bias below 2^-40 for the bounds used here).
  std::uint64_t below(std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

  /// Standard normal via Box-Muller; consumes two draws per call.
  double normal() noexcept {
    const double u1 = uniform_pos();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t state_;
};

/// Order-sensitive combination of seed components into a stream seed.
inline constexpr std::uint64_t derive_seed(std::uint64_t seed) noexcept { return SplitMix64::mix(seed); }

template <typename... Rest>
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t next, Rest... rest) noexcept {
  return derive_seed(SplitMix64::mix(seed ^ SplitMix64::mix(next + SplitMix64::kIncrement)), rest...);
}

}  // namespace netmetric
