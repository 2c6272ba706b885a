#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "propclust/generate.hpp"

namespace testing_support {

struct CorpusItem {
  propclust::Instance inst;
  propclust::Layout layout;
  std::uint64_t seed;
};

/// `count` seeded random instances cycling through the three layouts.
inline std::vector<CorpusItem> corpus(std::size_t count, std::uint64_t base_seed,
                                      const propclust::RandomSpec& spec) {
  using propclust::Layout;
  constexpr Layout kLayouts[] = {Layout::AgentsAreCandidates, Layout::AgentsInsideCandidates, Layout::General};
  std::vector<CorpusItem> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t seed = base_seed + i;
    std::mt19937_64 rng(seed);
    const Layout layout = kLayouts[i % 3];
    out.push_back({propclust::random_instance(rng, spec, layout), layout, seed});
  }
  return out;
}

}  // namespace testing_support
