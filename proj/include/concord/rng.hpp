#pragma once

#include <cstdint>

namespace concord {

/// The library's one random generator: SplitMix64 (Steele/Lea/Flood mixing
/// constants). Seeds are part of the external interface, so the algorithm is
/// fixed here and must not change.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0,1): top 53 bits scaled by 2^-53.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Sharding scheme for samplers (fixed, documented, part of the interface):
/// the draw-index space is cut into blocks of kSampleBlock consecutive draws;
/// block b is produced by a fresh SplitMix64 seeded with block_seed(seed, b).
/// Outputs therefore depend only on (count, seed), never on thread count.
inline constexpr std::int64_t kSampleBlock = 1 << 16;

inline std::uint64_t block_seed(std::uint64_t seed, std::uint64_t block) {
  SplitMix64 g(seed ^ (0xA0761D6478BD642Full * (block + 1)));
  return g.next();
}

}  // namespace concord
