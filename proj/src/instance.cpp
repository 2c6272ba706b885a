#include "propclust/instance.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "propclust/error.hpp"

namespace propclust {

Instance Instance::make(std::shared_ptr<const MetricSpace> space, std::vector<PointId> agents,
                        std::optional<std::vector<PointId>> candidates, std::size_t k) {
  if (!space) throw Error("invalid instance", "missing metric space");
  if (agents.empty()) throw Error("invalid instance", "at least one agent is required");
  if (k == 0) throw Error("invalid instance", "k must be positive");
  Instance inst;
  inst.k = k;
  const std::size_t points = space->size();
  for (PointId a : agents) {
    if (a >= points) throw Error("invalid instance", "agent id " + std::to_string(a) + " out of range");
  }
  if (candidates) {
    if (candidates->empty()) throw Error("invalid instance", "candidate set is empty");
    std::set<PointId> seen;
    for (PointId c : *candidates) {
      if (c >= points) {
        throw Error("invalid instance", "candidate id " + std::to_string(c) + " out of range");
      }
      if (!seen.insert(c).second) {
        throw Error("invalid instance", "duplicate candidate " + std::to_string(c));
      }
    }
    inst.candidates = std::move(*candidates);
  } else {
    inst.all_candidates = true;
    inst.candidates.resize(points);
    std::iota(inst.candidates.begin(), inst.candidates.end(), PointId{0});
  }
  inst.space = std::move(space);
  inst.agents = std::move(agents);
  return inst;
}

Instance Instance::with_k(std::size_t new_k) const {
  if (new_k == 0) throw Error("invalid instance", "k must be positive");
  Instance copy = *this;
  copy.k = new_k;
  return copy;
}

Instance Instance::with_candidates(std::vector<PointId> new_candidates) const {
  Instance copy = make(space, agents, std::move(new_candidates), k);
  copy.labels = labels;
  return copy;
}

bool Instance::is_candidate(PointId p) const { return candidate_index(p).has_value(); }

std::optional<std::size_t> Instance::candidate_index(PointId p) const {
  if (all_candidates) {
    if (p < candidates.size()) return p;
    return std::nullopt;
  }
  auto it = std::find(candidates.begin(), candidates.end(), p);
  if (it == candidates.end()) return std::nullopt;
  return static_cast<std::size_t>(it - candidates.begin());
}

std::string Instance::label(PointId p) const {
  if (p < labels.size()) return labels[p];
  return std::to_string(p);
}

bool agents_subset_of_candidates(const Instance& inst) {
  return std::all_of(inst.agents.begin(), inst.agents.end(),
                     [&](PointId a) { return inst.is_candidate(a); });
}

bool agents_equal_candidates(const Instance& inst) {
  std::vector<PointId> a = inst.agents;
  std::vector<PointId> c = inst.candidates;
  std::sort(a.begin(), a.end());
  std::sort(c.begin(), c.end());
  return a == c;  // candidates are duplicate-free, so equality also rules out repeated agents
}

Outcome Outcome::of(std::vector<PointId> centers, std::string origin) {
  std::sort(centers.begin(), centers.end());
  centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
  return Outcome{std::move(centers), std::move(origin)};
}

bool Outcome::contains(PointId p) const {
  return std::binary_search(centers.begin(), centers.end(), p);
}

std::size_t quota(std::size_t n, std::size_t k, std::size_t ell, const Rational& gamma) {
  if (k == 0) throw Error("invalid quota", "k must be positive");
  if (gamma < 1) throw Error("invalid quota", "gamma must be at least 1");
  // ceil(p * ell * n / (r * k)) with gamma = p / r, in 128-bit integers.
  __extension__ typedef unsigned __int128 Wide;
  const Wide num = static_cast<Wide>(gamma.numerator()) * ell * n;
  const Wide den = static_cast<Wide>(gamma.denominator()) * k;
  return static_cast<std::size_t>((num + den - 1) / den);
}

std::vector<Violation> validate(const Instance& inst, const Outcome& outcome) {
  std::vector<Violation> out;
  if (outcome.centers.size() > inst.k) {
    out.push_back({"size", "outcome has " + std::to_string(outcome.centers.size()) +
                               " centers but k = " + std::to_string(inst.k)});
  }
  for (PointId c : outcome.centers) {
    if (c >= inst.metric().size()) {
      out.push_back({"id", "center id " + std::to_string(c) + " out of range"});
    } else if (!inst.is_candidate(c)) {
      out.push_back({"membership", "center " + std::to_string(c) + " is not a candidate"});
    }
  }
  return out;
}

}  // namespace propclust
