#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "propclust/rational.hpp"

namespace propclust {

/// Index into the point set of a MetricSpace.
using PointId = std::size_t;

/// Tolerance used for every comparison between floating distances.
inline constexpr double kTolerance = 1e-9;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct DistanceMatrixSpec {
  std::vector<std::vector<double>> d;
};

struct GraphEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational weight{1};
};

struct WeightedGraphSpec {
  std::size_t nodes = 0;
  std::vector<GraphEdge> edges;
};

enum class Norm { L1, L2, LInf };

struct EuclideanSpec {
  std::size_t dim = 0;
  std::vector<std::vector<double>> coords;
  Norm norm = Norm::L2;
};

/// How a metric was described; kept alongside the dense distances so that
/// instances serialize back to exactly what was read.
using MetricDescriptor = std::variant<DistanceMatrixSpec, WeightedGraphSpec, EuclideanSpec>;

/// A finite metric space with all pairwise distances materialized at construction.
///
/// Graph metrics compute shortest paths in exact integer arithmetic (weights are
/// scaled by the lcm of their denominators), so integral fixtures yield exact
/// doubles. Distance matrices are validated for symmetry, a zero diagonal,
/// non-negativity and the triangle inequality. Immutable after construction.
class MetricSpace {
 public:
  explicit MetricSpace(MetricDescriptor descriptor);

  std::size_t size() const noexcept { return n_; }

  double dist(PointId a, PointId b) const { return d_[a * n_ + b]; }

  /// Distances from `a` to every point, indexed by PointId.
  std::span<const double> row(PointId a) const { return {d_.data() + a * n_, n_}; }

  const MetricDescriptor& descriptor() const noexcept { return descriptor_; }

 private:
  MetricDescriptor descriptor_;
  std::size_t n_ = 0;
  std::vector<double> d_;
};

/// Graphs up to this many nodes use Floyd-Warshall; larger ones run Dijkstra per source.
inline constexpr std::size_t kFloydWarshallLimit = 512;

/// Distance from `a` to the closest point of `targets`; +inf for an empty set.
double dist_to_set(const MetricSpace& space, PointId a, std::span<const PointId> targets);

/// The q-th smallest of {dist(a, t) : t in targets}, counted with multiplicity.
/// Throws Error("insufficient targets") when q is zero or exceeds |targets|.
double dist_q(const MetricSpace& space, PointId a, std::span<const PointId> targets, std::size_t q);

/// Members of `universe` within distance r (+ tolerance) of `a`, in universe order.
std::vector<PointId> ball(const MetricSpace& space, PointId a, double r,
                          std::span<const PointId> universe);

/// Smallest radius r such that B(a, r) holds at least `count` members of `agents`
/// (duplicates counted), i.e. the count-th smallest distance from a to agents.
double neighborhood_radius(const MetricSpace& space, PointId a, std::span<const PointId> agents,
                           std::size_t count);

/// x <= y up to the distance tolerance.
inline bool leq(double x, double y) { return x <= y + kTolerance; }

/// Ratio num/den with the zero conventions shared by all auditors:
/// den = 0 and num > 0 gives +inf, both zero gives 1.
double improvement_ratio(double num, double den);

std::string to_string(Norm norm);
Norm parse_norm(const std::string& tag);

}  // namespace propclust
