#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace regram {

/// Seedable generator with a portable output stream.
///
/// The engine is std::mt19937_64, whose sequence is fixed by the standard.
/// Bounded draws use rejection sampling instead of
/// std::uniform_int_distribution, whose algorithm differs between standard
/// libraries. Every randomized routine owns one Rng seeded from its caller's
/// seed; independent streams come from derive_seed(seed, index).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = engine_();
    while (x >= limit) {
      x = engine_();
    }
    return x % bound;
  }

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finaliser applied to (seed, stream); distinct streams of one
/// seed give unrelated engine seeds.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace regram
