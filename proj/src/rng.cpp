#include "pricelab/rng.hpp"

namespace pricelab {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t run_index,
                          std::uint64_t stream_index) {
  std::uint64_t h = mix64(master_seed + kGolden);
  h = mix64(h ^ (run_index + kGolden + (h << 6) + (h >> 2)));
  h = mix64(h ^ (stream_index + kGolden + (h << 6) + (h >> 2)));
  return h;
}

}  // namespace pricelab
