#include "propclust/metric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <queue>
#include <string>

#include "propclust/error.hpp"

namespace propclust {

namespace {

constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::max() / 4;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out) || out >= kUnreachable) {
    throw Error("metric undefined", "path length overflows the exact integer range");
  }
  return out;
}

std::vector<double> from_matrix(const DistanceMatrixSpec& spec) {
  const std::size_t n = spec.d.size();
  if (n == 0) throw Error("invalid metric", "distance matrix is empty");
  std::vector<double> d(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (spec.d[i].size() != n) throw Error("invalid metric", "distance matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      const double v = spec.d[i][j];
      if (!std::isfinite(v) || v < 0) {
        throw Error("invalid metric", "distances must be finite and non-negative");
      }
      d[i * n + j] = v;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (d[i * n + i] != 0) throw Error("invalid metric", "non-zero diagonal entry");
    for (std::size_t j = i + 1; j < n; ++j) {
      if (d[i * n + j] != d[j * n + i]) throw Error("invalid metric", "matrix is not symmetric");
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        if (!leq(d[x * n + z], d[x * n + y] + d[y * n + z])) {
          throw Error("invalid metric", "triangle inequality violated at (" + std::to_string(x) +
                                            ", " + std::to_string(y) + ", " + std::to_string(z) +
                                            ")");
        }
      }
    }
  }
  return d;
}

void floyd_warshall(std::vector<std::int64_t>& d, std::size_t n) {
  for (std::size_t via = 0; via < n; ++via) {
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t di = d[i * n + via];
      if (di >= kUnreachable) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const std::int64_t dj = d[via * n + j];
        if (dj >= kUnreachable) continue;
        const std::int64_t cand = checked_add(di, dj);
        if (cand < d[i * n + j]) d[i * n + j] = cand;
      }
    }
  }
}

void repeated_dijkstra(std::vector<std::int64_t>& d, std::size_t n,
                       const std::vector<std::vector<std::pair<std::size_t, std::int64_t>>>& adj) {
  using Item = std::pair<std::int64_t, std::size_t>;
  for (std::size_t s = 0; s < n; ++s) {
    std::int64_t* dist = d.data() + s * n;
    std::fill(dist, dist + n, kUnreachable);
    dist[s] = 0;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    heap.emplace(0, s);
    while (!heap.empty()) {
      auto [du, u] = heap.top();
      heap.pop();
      if (du != dist[u]) continue;
      for (auto [v, w] : adj[u]) {
        const std::int64_t cand = checked_add(du, w);
        if (cand < dist[v]) {
          dist[v] = cand;
          heap.emplace(cand, v);
        }
      }
    }
  }
}

std::vector<double> from_graph(const WeightedGraphSpec& spec) {
  const std::size_t n = spec.nodes;
  if (n == 0) throw Error("invalid metric", "graph has no nodes");

  // Scale all weights to integers by the lcm of their denominators.
  std::int64_t scale = 1;
  for (const auto& e : spec.edges) {
    if (e.u >= n || e.v >= n) throw Error("invalid metric", "edge endpoint out of range");
    if (e.weight < 0) throw Error("invalid metric", "negative edge weight");
    scale = std::lcm(scale, e.weight.denominator());
    if (scale <= 0 || scale >= kUnreachable) {
      throw Error("invalid metric", "edge weight denominators too large");
    }
  }

  std::vector<std::int64_t> d(n * n, kUnreachable);
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> adj(n);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0;
  for (const auto& e : spec.edges) {
    std::int64_t w = 0;
    if (__builtin_mul_overflow(e.weight.numerator(), scale / e.weight.denominator(), &w)) {
      throw Error("invalid metric", "edge weight overflows the exact integer range");
    }
    d[e.u * n + e.v] = std::min(d[e.u * n + e.v], w);
    d[e.v * n + e.u] = std::min(d[e.v * n + e.u], w);
    adj[e.u].emplace_back(e.v, w);
    adj[e.v].emplace_back(e.u, w);
  }

  if (n <= kFloydWarshallLimit) {
    floyd_warshall(d, n);
  } else {
    repeated_dijkstra(d, n, adj);
  }

  std::vector<double> out(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    if (d[i] >= kUnreachable) {
      throw Error("metric undefined", "graph is disconnected (no path between " +
                                          std::to_string(i / n) + " and " +
                                          std::to_string(i % n) + ")");
    }
    out[i] = static_cast<double>(d[i]) / static_cast<double>(scale);
  }
  return out;
}

std::vector<double> from_points(const EuclideanSpec& spec) {
  const std::size_t n = spec.coords.size();
  if (n == 0) throw Error("invalid metric", "no coordinate rows");
  for (const auto& row : spec.coords) {
    if (row.size() != spec.dim) throw Error("invalid metric", "coordinate row has wrong dimension");
    for (double x : row) {
      if (!std::isfinite(x)) throw Error("invalid metric", "non-finite coordinate");
    }
  }
  std::vector<double> d(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double acc = 0;
      for (std::size_t t = 0; t < spec.dim; ++t) {
        const double diff = std::abs(spec.coords[i][t] - spec.coords[j][t]);
        switch (spec.norm) {
          case Norm::L1: acc += diff; break;
          case Norm::L2: acc += diff * diff; break;
          case Norm::LInf: acc = std::max(acc, diff); break;
        }
      }
      if (spec.norm == Norm::L2) acc = std::sqrt(acc);
      d[i * n + j] = acc;
      d[j * n + i] = acc;
    }
  }
  return d;
}

}  // namespace

MetricSpace::MetricSpace(MetricDescriptor descriptor) : descriptor_(std::move(descriptor)) {
  d_ = std::visit(
      [](const auto& spec) {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, DistanceMatrixSpec>) return from_matrix(spec);
        else if constexpr (std::is_same_v<T, WeightedGraphSpec>) return from_graph(spec);
        else return from_points(spec);
      },
      descriptor_);
  n_ = std::visit(
      [](const auto& spec) -> std::size_t {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, DistanceMatrixSpec>) return spec.d.size();
        else if constexpr (std::is_same_v<T, WeightedGraphSpec>) return spec.nodes;
        else return spec.coords.size();
      },
      descriptor_);
}

double dist_to_set(const MetricSpace& space, PointId a, std::span<const PointId> targets) {
  double best = kInfinity;
  for (PointId t : targets) best = std::min(best, space.dist(a, t));
  return best;
}

double dist_q(const MetricSpace& space, PointId a, std::span<const PointId> targets,
              std::size_t q) {
  if (q == 0 || q > targets.size()) {
    throw Error("insufficient targets", "q = " + std::to_string(q) + " but only " +
                                            std::to_string(targets.size()) + " targets");
  }
  std::vector<double> ds;
  ds.reserve(targets.size());
  for (PointId t : targets) ds.push_back(space.dist(a, t));
  std::nth_element(ds.begin(), ds.begin() + static_cast<std::ptrdiff_t>(q - 1), ds.end());
  return ds[q - 1];
}

std::vector<PointId> ball(const MetricSpace& space, PointId a, double r,
                          std::span<const PointId> universe) {
  std::vector<PointId> out;
  for (PointId x : universe) {
    if (leq(space.dist(a, x), r)) out.push_back(x);
  }
  return out;
}

double neighborhood_radius(const MetricSpace& space, PointId a, std::span<const PointId> agents,
                           std::size_t count) {
  if (count == 0 || count > agents.size()) {
    throw Error("insufficient agents", "count = " + std::to_string(count) + " but only " +
                                           std::to_string(agents.size()) + " agents");
  }
  return dist_q(space, a, agents, count);
}

double improvement_ratio(double num, double den) {
  if (den <= kTolerance) return num <= kTolerance ? 1.0 : kInfinity;
  return num / den;
}

std::string to_string(Norm norm) {
  switch (norm) {
    case Norm::L1: return "l1";
    case Norm::L2: return "l2";
    case Norm::LInf: return "linf";
  }
  return "l2";
}

Norm parse_norm(const std::string& tag) {
  if (tag == "l1") return Norm::L1;
  if (tag == "l2") return Norm::L2;
  if (tag == "linf") return Norm::LInf;
  throw Error("invalid metric", "unknown norm '" + tag + "'");
}

}  // namespace propclust
