#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace propclust {

/// Uniform integer in [0, bound) drawn by rejection, identical on every platform.
inline std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % bound;
  }
}

/// Uniform integer in [lo, hi].
inline std::uint64_t draw_between(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + draw_below(rng, hi - lo + 1);
}

/// Uniform random `count`-subset of `pool` via a partial Fisher-Yates shuffle, returned sorted.
template <typename T>
std::vector<T> sample(std::vector<T> pool, std::size_t count, std::mt19937_64& rng) {
  count = std::min(count, pool.size());
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + draw_below(rng, pool.size() - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace propclust
