#pragma once

#include <cstdint>

namespace phaserqa {

/// SplitMix64 (Steele, Lea & Flood 2014). The state advances by the golden
/// gamma 0x9E3779B97F4A7C15 and the output is the standard two-multiply mix.
/// Reference outputs for seed 0:
///   0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;

  /// Uniform double in (0, 1]: the top 53 bits plus one, scaled by 2^-53.
  double next_unit_open_closed() noexcept;

 private:
  std::uint64_t state_;
};

/// Standard normal deviates from SplitMix64 via the cosine branch of the
/// Box-Muller transform: z = sqrt(-2 ln u1) * cos(2 pi u2). Each deviate
/// consumes exactly two uniforms, so the stream is a pure function of seed.
class NormalStream {
 public:
  explicit NormalStream(std::uint64_t seed) noexcept : uniform_(seed) {}

  double next() noexcept;

 private:
  SplitMix64 uniform_;
};

}  // namespace phaserqa
