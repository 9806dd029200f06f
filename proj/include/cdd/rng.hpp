#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "cdd/types.hpp"

namespace cdd {

// Deterministic RNG with portable bounded sampling. std::mt19937_64 is
// specified bit-exactly by the standard; the distributions are not, so
// bounded draws are done here by rejection instead of std::uniform_*.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

  // Independent stream k of a master seed. Chains of the annealer use
  // streams 1..ensemble_size; stream 0 feeds the temperature estimate.
  static Rng for_stream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(mix(seed) ^ mix(0x9E3779B97F4A7C15ULL * (stream + 1)));
  }

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound), bound >= 1, unbiased.
  Int below(Int bound) {
    const auto b = static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % b;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return static_cast<Int>(r % b);
  }

  // Uniform in [lo, hi], inclusive.
  Int range(Int lo, Int hi) { return lo + below(hi - lo + 1); }

  // Uniform in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <typename T>
  void shuffle(std::span<T> values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[static_cast<std::size_t>(below(static_cast<Int>(i)))]);
    }
  }

  // k distinct values from {0,..,n-1} by partial Fisher-Yates, order random.
  std::vector<int> distinct(int n, int k) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < k; ++i) {
      const auto j = static_cast<std::size_t>(i + below(n - i));
      std::swap(pool[static_cast<std::size_t>(i)], pool[j]);
    }
    pool.resize(static_cast<std::size_t>(k));
    return pool;
  }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace cdd
