#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace selpred {

// splitmix64: tiny portable PRNG. All seeded randomness in the project goes
// through this generator so that experiment outputs are reproducible across
// platforms and reimplementations.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound); bound = 0 returns 0. Plain modulo: the bias is
  // negligible for the small bounds used here and the mapping is trivially
  // portable.
  std::uint64_t next_below(std::uint64_t bound) {
    return bound == 0 ? 0 : next() % bound;
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

private:
  std::uint64_t state_;
};

// Scrambles a value through the splitmix64 output permutation. Used to derive
// independent stream seeds from (seed, stream index) pairs.
inline std::uint64_t scramble64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return scramble64(seed ^ scramble64(stream + 0x9E3779B97F4A7C15ull));
}

// First `count` elements of a uniform random permutation of `pool`, returned
// sorted. Partial Fisher-Yates; deterministic given the generator state.
template <typename T>
std::vector<T> sample_without_replacement(std::vector<T> pool, std::size_t count,
                                          SplitMix64& rng) {
  if (count > pool.size()) count = pool.size();
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng.next_below(pool.size() - i));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace selpred
