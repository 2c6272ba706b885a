#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "propclust/instance.hpp"

namespace propclust {

enum class Family { Euclidean, Graph, Blocks };

Family parse_family(const std::string& tag);
const char* to_string(Family family);

/// Deterministic instance with N = C for (family, n, k, seed):
///   euclidean: n integer points in [0,10]^2 under l2, candidates "all";
///   graph: random spanning tree plus about n/2 extra edges, integer weights 1..5;
///   blocks: ceil(n/k) agents at one location and the rest at distance 1 (seed unused).
Instance generate(Family family, std::size_t n, std::size_t k, std::uint64_t seed);

/// How agents relate to candidates in a random test instance.
enum class Layout { AgentsAreCandidates, AgentsInsideCandidates, General };

const char* to_string(Layout layout);

struct RandomSpec {
  std::size_t max_agents = 12;
  std::size_t max_candidates = 12;
  std::size_t max_k = 5;
};

/// Small random instance for property and oracle tests. The layout and metric type are
/// drawn from `rng`; co-located points and repeated agents occur in the General layout.
Instance random_instance(std::mt19937_64& rng, const RandomSpec& spec, Layout layout);

/// Uniformly sized random subset of C with at most k members.
Outcome random_outcome(const Instance& inst, std::mt19937_64& rng);

}  // namespace propclust
