#pragma once

#include <cstdint>

namespace expmde {

/// SplitMix64: state advances by 0x9E3779B97F4A7C15 per draw and each
/// output is the finalizer mix of the new state. Normals use Box-Muller on
/// two consecutive uniforms, keeping only the cosine branch, so every
/// normal consumes exactly two 64-bit draws. This fixes the streams that
/// the matrix generators depend on.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;
  /// Uniform on (0, 1), 53-bit resolution.
  double uniform() noexcept;
  double normal() noexcept;

 private:
  std::uint64_t state_;
};

/// Independent stream `stream` derived from `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

}  // namespace expmde
