#include "propclust/audit_single.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "propclust/error.hpp"

namespace propclust {

namespace {

/// Indices sorted by key descending, ties by index ascending.
std::vector<std::size_t> rank_descending(std::span<const double> key) {
  std::vector<std::size_t> order(key.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return key[x] > key[y]; });
  return order;
}

double set_ratio(std::span<const double> num, std::span<const double> den,
                 std::span<const std::size_t> set) {
  double a = 0;
  double b = 0;
  for (std::size_t i : set) {
    a += num[i];
    b += den[i];
  }
  return improvement_ratio(a, b);
}

}  // namespace

SubsetRatio max_subset_ratio(std::span<const double> num, std::span<const double> den,
                             std::size_t min_size) {
  const std::size_t n = num.size();
  SubsetRatio out;
  if (min_size > n) return out;
  min_size = std::max<std::size_t>(min_size, 1);

  // An unbounded numerator makes any group containing it infinitely better off.
  if (std::any_of(num.begin(), num.end(), [](double v) { return std::isinf(v); })) {
    auto order = rank_descending(num);
    out.set.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(min_size));
    std::sort(out.set.begin(), out.set.end());
    out.value = kInfinity;
    return out;
  }

  // Agents already sitting on the candidate: if enough of them exist and one of them is
  // not served at distance zero, the ratio is unbounded.
  std::vector<std::size_t> zero_den;
  double zero_num = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (den[i] <= kTolerance) {
      zero_den.push_back(i);
      zero_num += num[i];
    }
  }
  if (zero_den.size() >= min_size && zero_num > kTolerance) {
    out.set = zero_den;
    out.value = kInfinity;
    return out;
  }

  std::vector<double> margin(n);
  auto best_set_at = [&](double t) {
    for (std::size_t i = 0; i < n; ++i) margin[i] = num[i] - t * den[i];
    auto order = rank_descending(margin);
    std::vector<std::size_t> set(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(min_size));
    double total = 0;
    for (std::size_t i : set) total += margin[i];
    for (std::size_t j = min_size; j < n && margin[order[j]] > 0; ++j) {
      set.push_back(order[j]);
      total += margin[order[j]];
    }
    std::sort(set.begin(), set.end());
    return std::make_pair(std::move(set), total);
  };

  auto [set, unused] = best_set_at(0.0);
  (void)unused;
  double t = set_ratio(num, den, set);
  for (int iter = 0; iter < 10000; ++iter) {
    auto [next, surplus] = best_set_at(t);
    if (surplus <= 1e-12 * std::max(1.0, t)) break;
    const double t_next = set_ratio(num, den, next);
    if (!(t_next > t + 1e-12 * std::max(1.0, t))) break;
    t = t_next;
    set = std::move(next);
  }
  out.value = t;
  out.set = std::move(set);
  return out;
}

AuditReport pf_min_alpha(const Instance& inst, const Outcome& w) {
  const MetricSpace& space = inst.metric();
  const std::size_t n = inst.n();
  const std::size_t need = quota(n, inst.k, 1);
  AuditReport report;
  report.notion = Notion::ProportionalFairness;

  std::vector<double> served(n);
  for (std::size_t i = 0; i < n; ++i) served[i] = dist_to_set(space, inst.agents[i], w.centers);

  double best = 0;
  std::optional<Witness> best_witness;
  std::vector<double> ratio(n);
  for (PointId c : inst.candidates) {
    if (w.contains(c)) continue;
    for (std::size_t i = 0; i < n; ++i) {
      ratio[i] = improvement_ratio(served[i], space.dist(inst.agents[i], c));
    }
    auto order = rank_descending(ratio);
    const double value = ratio[order[need - 1]];
    if (!best_witness || value > best) {
      best = value;
      Witness wit;
      wit.agents.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(need));
      std::sort(wit.agents.begin(), wit.agents.end());
      wit.candidates = {c};
      best_witness = std::move(wit);
    }
  }
  report.value = std::max(1.0, best);
  if (best_witness && best > 1.0) report.witness = std::move(best_witness);
  return report;
}

AuditReport if_min_beta(const Instance& inst, const Outcome& w) {
  if (!agents_subset_of_candidates(inst)) {
    throw Error("IF undefined", "individual fairness requires every agent to be a candidate");
  }
  const MetricSpace& space = inst.metric();
  const std::size_t n = inst.n();
  const std::size_t need = quota(n, inst.k, 1);
  AuditReport report;
  report.notion = Notion::IndividualFairness;

  double best = 0;
  std::size_t arg = 0;
  double arg_radius = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double radius = neighborhood_radius(space, inst.agents[i], inst.agents, need);
    const double value =
        improvement_ratio(dist_to_set(space, inst.agents[i], w.centers), radius);
    if (i == 0 || value > best) {
      best = value;
      arg = i;
      arg_radius = radius;
    }
  }
  report.value = std::max(1.0, best);
  if (best > 1.0) {
    Witness wit;
    wit.agents = {arg};
    wit.threshold = arg_radius;
    report.witness = std::move(wit);
  }
  return report;
}

AuditReport tc_min_alpha(const Instance& inst, const Outcome& w, const Rational& gamma) {
  const MetricSpace& space = inst.metric();
  const std::size_t n = inst.n();
  const std::size_t need = quota(n, inst.k, 1, gamma);
  AuditReport report;
  report.notion = Notion::TransferableCore;
  report.params.gamma = gamma;

  std::vector<double> served(n);
  for (std::size_t i = 0; i < n; ++i) served[i] = dist_to_set(space, inst.agents[i], w.centers);

  double best = 0;
  std::optional<Witness> best_witness;
  std::vector<double> to_c(n);
  if (need <= n) {
    for (PointId c : inst.candidates) {
      if (w.contains(c)) continue;
      for (std::size_t i = 0; i < n; ++i) to_c[i] = space.dist(inst.agents[i], c);
      SubsetRatio r = max_subset_ratio(served, to_c, need);
      if (!best_witness || r.value > best) {
        best = r.value;
        best_witness = Witness{std::move(r.set), {c}, {}, std::nullopt, std::nullopt};
      }
    }
  }
  report.value = std::max(1.0, best);
  if (best_witness && best > 1.0) report.witness = std::move(best_witness);
  return report;
}

double evaluate_pf_witness(const Instance& inst, const Outcome& w, const Witness& witness) {
  const MetricSpace& space = inst.metric();
  double worst = kInfinity;
  for (std::size_t i : witness.agents) {
    const PointId p = inst.agents.at(i);
    worst = std::min(worst, improvement_ratio(dist_to_set(space, p, w.centers),
                                              space.dist(p, witness.candidates.at(0))));
  }
  return worst;
}

double evaluate_tc_witness(const Instance& inst, const Outcome& w, const Witness& witness) {
  const MetricSpace& space = inst.metric();
  double a = 0;
  double b = 0;
  for (std::size_t i : witness.agents) {
    const PointId p = inst.agents.at(i);
    a += dist_to_set(space, p, w.centers);
    b += space.dist(p, witness.candidates.at(0));
  }
  return improvement_ratio(a, b);
}

}  // namespace propclust
