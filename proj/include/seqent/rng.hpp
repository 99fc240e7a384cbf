#ifndef SEQENT_RNG_HPP
#define SEQENT_RNG_HPP

#include <cstdint>
#include <string_view>

namespace seqent::rng {

inline constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

/// SplitMix64 output function. Fully specified, so streams are identical
/// across platforms and standard-library implementations.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Splittable counter scheme: derive_seed(master, k) is the k-th output of
/// the SplitMix64 stream seeded with `master`. Used to give replicates,
/// sweep stages, and per-user jobs independent deterministic substreams.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return mix64(master + (index + 1) * kGoldenGamma);
}

/// FNV-1a, for mapping opaque user ids onto stable per-user seeds.
constexpr std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : s) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

constexpr std::uint64_t user_seed(std::uint64_t master, std::string_view user) {
  return mix64(master ^ fnv1a64(user));
}

/// Counter-based SplitMix64 generator.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += kGoldenGamma;
    return mix64(state_);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Unbiased uniform integer in [0, bound) via Lemire's method.
  std::uint64_t next_below(std::uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto lo = static_cast<std::uint64_t>(m);
    if (lo < bound) {
      const std::uint64_t threshold = -bound % bound;
      while (lo < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        lo = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace seqent::rng

#endif  // SEQENT_RNG_HPP
