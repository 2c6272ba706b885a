#include "propclust/generate.hpp"

#include <algorithm>
#include <numeric>

#include "propclust/error.hpp"
#include "propclust/random.hpp"

namespace propclust {

namespace {

std::vector<PointId> all_ids(std::size_t n) {
  std::vector<PointId> ids(n);
  std::iota(ids.begin(), ids.end(), PointId{0});
  return ids;
}

MetricDescriptor random_points(std::mt19937_64& rng, std::size_t n, std::int64_t side, Norm norm) {
  EuclideanSpec spec;
  spec.dim = 2;
  spec.norm = norm;
  for (std::size_t i = 0; i < n; ++i) {
    spec.coords.push_back({static_cast<double>(draw_between(rng, 0, side)),
                           static_cast<double>(draw_between(rng, 0, side))});
  }
  return spec;
}

MetricDescriptor random_graph(std::mt19937_64& rng, std::size_t n, std::size_t extra, std::uint64_t max_w,
                              bool allow_zero) {
  WeightedGraphSpec spec;
  spec.nodes = n;
  auto weight = [&] {
    return Rational(static_cast<std::int64_t>(draw_between(rng, allow_zero ? 0 : 1, max_w)));
  };
  for (std::size_t v = 1; v < n; ++v) spec.edges.push_back({draw_below(rng, v), v, weight()});
  for (std::size_t e = 0; e < extra && n > 1; ++e) {
    const std::size_t u = draw_below(rng, n);
    const std::size_t v = draw_below(rng, n);
    if (u != v) spec.edges.push_back({u, v, weight()});
  }
  return spec;
}

}  // namespace

Family parse_family(const std::string& tag) {
  if (tag == "euclidean") return Family::Euclidean;
  if (tag == "graph") return Family::Graph;
  if (tag == "blocks") return Family::Blocks;
  throw Error("invalid input", "unknown family '" + tag + "'");
}

const char* to_string(Family family) {
  switch (family) {
    case Family::Euclidean: return "euclidean";
    case Family::Graph: return "graph";
    case Family::Blocks: return "blocks";
  }
  return "?";
}

Instance generate(Family family, std::size_t n, std::size_t k, std::uint64_t seed) {
  if (n == 0 || k == 0) throw Error("invalid input", "n and k must be positive");
  std::mt19937_64 rng(seed);
  MetricDescriptor metric;
  switch (family) {
    case Family::Euclidean:
      metric = random_points(rng, n, 10, Norm::L2);
      break;
    case Family::Graph:
      metric = random_graph(rng, n, n / 2, 5, false);
      break;
    case Family::Blocks: {
      const std::size_t first = (n + k - 1) / k;
      std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) d[i][j] = ((i < first) != (j < first)) ? 1.0 : 0.0;
      }
      metric = DistanceMatrixSpec{std::move(d)};
      break;
    }
  }
  return Instance::make(std::make_shared<const MetricSpace>(std::move(metric)), all_ids(n), std::nullopt, k);
}

const char* to_string(Layout layout) {
  switch (layout) {
    case Layout::AgentsAreCandidates: return "N=C";
    case Layout::AgentsInsideCandidates: return "N<=C";
    case Layout::General: return "general";
  }
  return "?";
}

Instance random_instance(std::mt19937_64& rng, const RandomSpec& spec, Layout layout) {
  const std::size_t n = draw_between(rng, 2, spec.max_agents);
  const std::size_t k = draw_between(rng, 1, spec.max_k);
  std::size_t points = 0;
  switch (layout) {
    case Layout::AgentsAreCandidates:
      points = std::min(n, spec.max_candidates);
      break;
    case Layout::AgentsInsideCandidates:
      points = draw_between(rng, std::min(n, spec.max_candidates), spec.max_candidates);
      break;
    case Layout::General:
      points = draw_between(rng, 2, spec.max_agents + spec.max_candidates);
      break;
  }
  MetricDescriptor metric;
  switch (draw_below(rng, 3)) {
    case 0: metric = random_points(rng, points, 6, Norm::L2); break;
    case 1: metric = random_points(rng, points, 6, Norm::L1); break;
    default: metric = random_graph(rng, points, points / 2, 4, layout == Layout::General); break;
  }
  auto space = std::make_shared<const MetricSpace>(std::move(metric));

  std::vector<PointId> agents;
  std::optional<std::vector<PointId>> candidates;
  switch (layout) {
    case Layout::AgentsAreCandidates:
      agents = all_ids(points);
      break;
    case Layout::AgentsInsideCandidates:
      agents = sample(all_ids(points), std::min(n, points), rng);
      break;
    case Layout::General: {
      for (std::size_t i = 0; i < n; ++i) agents.push_back(draw_below(rng, points));
      const std::size_t c = draw_between(rng, 1, std::min(points, spec.max_candidates));
      candidates = sample(all_ids(points), c, rng);
      break;
    }
  }
  return Instance::make(std::move(space), std::move(agents), std::move(candidates), k);
}

Outcome random_outcome(const Instance& inst, std::mt19937_64& rng) {
  const std::size_t size = draw_between(rng, 0, std::min(inst.k, inst.candidates.size()));
  return Outcome::of(sample(inst.candidates, size, rng));
}

}  // namespace propclust
