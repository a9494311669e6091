#pragma once

#include <array>
#include <cstdint>

namespace quack {

/// Philox4x32-10 counter-based random generator.
///
/// Counter-based generation gives cheap, collision-free substreams: the
/// 64-bit `stream` selects an independent sequence under the same seed, so
/// concurrent evaluations can draw from disjoint streams and replay
/// deterministically. Output is identical on all platforms.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_(stream) {}

  std::uint32_t next_u32() {
    if (cache_pos_ == 4) refill();
    return cache_[cache_pos_++];
  }

  std::uint64_t next_u64() {
    const std::uint64_t lo = next_u32();
    const std::uint64_t hi = next_u32();
    return lo | (hi << 32);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal via Box-Muller (caches the second variate).
  double normal();

  /// One Philox4x32-10 block; exposed for known-answer tests.
  static std::array<std::uint32_t, 4> philox_block(std::array<std::uint32_t, 4> counter,
                                                   std::array<std::uint32_t, 2> key);

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_ = 0;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> cache_{};
  int cache_pos_ = 4;
  bool have_normal_ = false;
  double spare_normal_ = 0.0;
};

/// SplitMix64 finalizer; used to derive per-iteration seeds.
std::uint64_t mix64(std::uint64_t x);

}  // namespace quack
