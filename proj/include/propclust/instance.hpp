#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "propclust/metric.hpp"
#include "propclust/rational.hpp"

namespace propclust {

/// A clustering problem: agents N and candidates C inside one metric space, plus k.
///
/// Agents are an ordered list of points; the same point may appear more than once
/// (co-located voters stay distinct agents). Agent indices 0..n-1 refer to this list.
/// Candidates are always stored expanded; `all_candidates` remembers the "all" tag.
struct Instance {
  std::shared_ptr<const MetricSpace> space;
  std::vector<PointId> agents;
  std::vector<PointId> candidates;
  bool all_candidates = false;
  std::size_t k = 1;
  /// Optional display names per point (fixtures use the figure labels).
  std::vector<std::string> labels;

  std::size_t n() const noexcept { return agents.size(); }
  const MetricSpace& metric() const { return *space; }

  /// Validates ids, n >= 1, k >= 1 and non-empty, duplicate-free candidates.
  static Instance make(std::shared_ptr<const MetricSpace> space, std::vector<PointId> agents,
                       std::optional<std::vector<PointId>> candidates, std::size_t k);

  /// Copy with a different committee size.
  Instance with_k(std::size_t new_k) const;
  /// Copy with a different candidate list.
  Instance with_candidates(std::vector<PointId> new_candidates) const;

  bool is_candidate(PointId p) const;
  /// Position of p in the candidate list, if present.
  std::optional<std::size_t> candidate_index(PointId p) const;
  /// Label for display; falls back to the numeric id.
  std::string label(PointId p) const;
};

/// Every agent point is also a candidate.
bool agents_subset_of_candidates(const Instance& inst);
/// Agents and candidates are the same set of points and no point hosts two agents.
bool agents_equal_candidates(const Instance& inst);

/// A chosen center set W, stored sorted and duplicate-free.
struct Outcome {
  std::vector<PointId> centers;
  /// "external", or the producing rule, e.g. "gc", "fgc(q=2,seed=7)", "ea-restricted".
  std::string origin = "external";

  static Outcome of(std::vector<PointId> centers, std::string origin = "external");
  std::size_t size() const noexcept { return centers.size(); }
  bool contains(PointId p) const;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// ceil(gamma * ell * n / k), computed exactly. Throws Error when k = 0 or gamma < 1.
std::size_t quota(std::size_t n, std::size_t k, std::size_t ell, const Rational& gamma = Rational(1));

struct Violation {
  std::string kind;  // "size", "membership" or "id"
  std::string message;
};

/// Structural checks on an outcome: ids in range, W subset of C, |W| <= k.
std::vector<Violation> validate(const Instance& inst, const Outcome& outcome);

}  // namespace propclust
