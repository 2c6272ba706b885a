#include "propclust/audit_multi.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

#include "propclust/audit_single.hpp"
#include "propclust/error.hpp"

namespace propclust {

namespace {

/// Calls f(ordinal, combo) for every combo of `size` positions out of `m`, in lex order.
template <typename F>
void for_each_combination(std::size_t m, std::size_t size, std::size_t& ordinal, F&& f) {
  if (size > m) return;
  std::vector<std::size_t> combo(size);
  std::iota(combo.begin(), combo.end(), std::size_t{0});
  for (;;) {
    f(ordinal++, combo);
    std::size_t i = size;
    while (i > 0 && combo[i - 1] == m - size + i - 1) --i;
    if (i == 0) return;
    ++combo[i - 1];
    for (std::size_t j = i; j < size; ++j) combo[j] = combo[j - 1] + 1;
  }
}

struct Best {
  double value = -1;
  std::size_t ordinal = 0;
  std::optional<Witness> witness;
};

/// Scores every C' with q <= |C'| <= cap; `score` returns (value, witness) for one C'.
/// Work is dealt round-robin by ordinal and merged by (value desc, ordinal asc).
template <typename Score>
Best search_subsets(const Instance& inst, std::size_t q, std::size_t cap, unsigned threads,
                    Score&& score) {
  const std::size_t m = inst.candidates.size();
  threads = std::max(1u, threads);
  std::vector<Best> partial(threads);
  auto worker = [&](unsigned t) {
    Best& best = partial[t];
    std::vector<PointId> subset;
    std::size_t ordinal = 0;
    for (std::size_t s = q; s <= cap; ++s) {
      for_each_combination(m, s, ordinal, [&](std::size_t ord, const std::vector<std::size_t>& combo) {
        if (ord % threads != t) return;
        subset.clear();
        for (std::size_t pos : combo) subset.push_back(inst.candidates[pos]);
        auto scored = score(subset);
        if (!scored) return;
        if (!best.witness || scored->first > best.value) {
          best.value = scored->first;
          best.ordinal = ord;
          best.witness = std::move(scored->second);
        }
      });
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  Best merged;
  for (auto& b : partial) {
    if (!b.witness) continue;
    if (!merged.witness || b.value > merged.value ||
        (b.value == merged.value && b.ordinal < merged.ordinal)) {
      merged = std::move(b);
    }
  }
  return merged;
}

std::vector<double> served_q(const Instance& inst, const Outcome& w, std::size_t q) {
  std::vector<double> out(inst.n(), kInfinity);
  if (w.size() < q) return out;
  for (std::size_t i = 0; i < inst.n(); ++i) {
    out[i] = dist_q(inst.metric(), inst.agents[i], w.centers, q);
  }
  return out;
}

std::size_t resolve_cap(const Instance& inst, std::size_t q, std::optional<std::size_t> size_cap) {
  if (q == 0 || q > inst.k) {
    throw Error("invalid parameter", "q must satisfy 1 <= q <= k, got q = " + std::to_string(q));
  }
  if (size_cap && *size_cap < q) throw Error("invalid parameter", "size cap must be at least q");
  // With fewer than q candidates no deviating set exists and the enumeration is empty.
  const std::size_t cap = size_cap.value_or(std::max(default_size_cap(inst), q));
  return std::min(cap, inst.candidates.size());
}

AuditStatus status_for(const Instance& inst, std::size_t cap) {
  return cap < std::min(inst.k, inst.candidates.size()) ? AuditStatus::CapExhausted
                                                        : AuditStatus::Exact;
}

}  // namespace

std::size_t default_size_cap(const Instance& inst) {
  return std::min({inst.k, inst.candidates.size(), kDefaultSizeCapLimit});
}

AuditReport q_core_min_alpha(const Instance& inst, const Outcome& w, std::size_t q,
                             std::optional<std::size_t> size_cap, unsigned threads) {
  const std::size_t cap = resolve_cap(inst, q, size_cap);
  const std::size_t n = inst.n();
  const auto served = served_q(inst, w, q);

  auto score = [&](const std::vector<PointId>& subset) -> std::optional<std::pair<double, Witness>> {
    const std::size_t need = quota(n, inst.k, subset.size());
    if (need > n) return std::nullopt;
    std::vector<double> ratio(n);
    for (std::size_t i = 0; i < n; ++i) {
      ratio[i] = improvement_ratio(served[i], dist_q(inst.metric(), inst.agents[i], subset, q));
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return ratio[x] > ratio[y]; });
    Witness wit;
    wit.agents.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(need));
    std::sort(wit.agents.begin(), wit.agents.end());
    wit.candidates = subset;
    wit.ell = subset.size();
    return std::make_pair(ratio[order[need - 1]], std::move(wit));
  };
  Best best = search_subsets(inst, q, cap, threads, score);

  AuditReport report;
  report.notion = Notion::QCore;
  report.params.q = q;
  report.params.size_cap = cap;
  report.status = status_for(inst, cap);
  report.value = std::max(1.0, best.value);
  if (best.witness && best.value > 1.0) report.witness = std::move(best.witness);
  return report;
}

AuditReport q_if_min_beta(const Instance& inst, const Outcome& w, std::size_t q) {
  if (!agents_subset_of_candidates(inst)) {
    throw Error("IF undefined", "q-individual fairness requires every agent to be a candidate");
  }
  if (inst.k > inst.n()) throw Error("IF undefined", "q-individual fairness requires k <= n");
  if (q == 0 || q > w.size()) {
    throw Error("insufficient targets", "q must satisfy 1 <= q <= |W|");
  }
  const MetricSpace& space = inst.metric();
  const std::size_t n = inst.n();
  const std::size_t need = quota(n, inst.k, q);
  AuditReport report;
  report.notion = Notion::QIndividualFairness;
  report.params.q = q;

  double best = 0;
  std::size_t arg = 0;
  double arg_radius = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double radius = neighborhood_radius(space, inst.agents[i], inst.agents, need);
    const double value = improvement_ratio(dist_q(space, inst.agents[i], w.centers, q), radius);
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

AuditReport q_tc_min_alpha(const Instance& inst, const Outcome& w, std::size_t q,
                           const Rational& gamma, std::optional<std::size_t> size_cap,
                           unsigned threads) {
  const std::size_t cap = resolve_cap(inst, q, size_cap);
  const std::size_t n = inst.n();
  const auto served = served_q(inst, w, q);

  auto score = [&](const std::vector<PointId>& subset) -> std::optional<std::pair<double, Witness>> {
    const std::size_t need = quota(n, inst.k, subset.size(), gamma);
    if (need > n) return std::nullopt;
    std::vector<double> to_subset(n);
    for (std::size_t i = 0; i < n; ++i) to_subset[i] = dist_q(inst.metric(), inst.agents[i], subset, q);
    SubsetRatio r = max_subset_ratio(served, to_subset, need);
    Witness wit;
    wit.agents = std::move(r.set);
    wit.candidates = subset;
    wit.ell = subset.size();
    return std::make_pair(r.value, std::move(wit));
  };
  Best best = search_subsets(inst, q, cap, threads, score);

  AuditReport report;
  report.notion = Notion::QTransferableCore;
  report.params.q = q;
  report.params.gamma = gamma;
  report.params.size_cap = cap;
  report.status = status_for(inst, cap);
  report.value = std::max(1.0, best.value);
  if (best.witness && best.value > 1.0) report.witness = std::move(best.witness);
  return report;
}

double evaluate_qcore_witness(const Instance& inst, const Outcome& w, std::size_t q,
                              const Witness& witness) {
  const auto served = served_q(inst, w, q);
  double worst = kInfinity;
  for (std::size_t i : witness.agents) {
    worst = std::min(worst, improvement_ratio(served.at(i), dist_q(inst.metric(), inst.agents.at(i),
                                                                   witness.candidates, q)));
  }
  return worst;
}

double evaluate_qtc_witness(const Instance& inst, const Outcome& w, std::size_t q,
                            const Witness& witness) {
  const auto served = served_q(inst, w, q);
  double a = 0;
  double b = 0;
  for (std::size_t i : witness.agents) {
    a += served.at(i);
    b += dist_q(inst.metric(), inst.agents.at(i), witness.candidates, q);
  }
  return improvement_ratio(a, b);
}

}  // namespace propclust
