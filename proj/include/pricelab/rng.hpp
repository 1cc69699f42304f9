#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace pricelab {

// Deterministic random stream. The engine is std::mt19937_64 (its output
// sequence is pinned by the standard); all distributions are hand-rolled on
// top of the raw 64-bit output so that streams replay identically across
// standard-library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  // Uniform integer in [0, n). Rejection sampling, bias-free.
  std::uint64_t uniform_int(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return x % n;
  }

  // In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Collision-resistant seed derivation for (master seed, run, stream) tuples:
// a hash-combine chain finished with the splitmix64 mixer. The formula is
// part of the on-disk reproducibility contract and must not change.
//
// Stream index 0 is the environment; streams 1..n are the agents.
std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t run_index,
                          std::uint64_t stream_index);

}  // namespace pricelab
