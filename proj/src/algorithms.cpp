#include "propclust/algorithms.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "propclust/error.hpp"
#include "propclust/random.hpp"

namespace propclust {

namespace {

void require_candidates(const Instance& inst) {
  if (inst.candidates.empty()) throw Error("empty candidates", "the candidate set is empty");
}

std::vector<double> sorted_distinct(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  std::vector<double> out;
  for (double v : values) {
    if (out.empty() || v > out.back() + kTolerance) out.push_back(v);
  }
  return out;
}

}  // namespace

Solution greedy_capture(const Instance& inst) {
  require_candidates(inst);
  const MetricSpace& space = inst.metric();
  const std::size_t n = inst.n();
  const std::size_t need = quota(n, inst.k, 1);

  std::vector<bool> alive(n, true);
  std::size_t alive_count = n;
  std::vector<bool> opened(inst.candidates.size(), false);
  std::vector<PointId> centers;
  Solution sol;
  double delta = 0;
  std::vector<double> scratch;

  while (alive_count > 0) {
    // Earliest candidate whose ball reaches the quota of remaining agents.
    double open_at = kInfinity;
    std::optional<std::size_t> open_ci;
    if (alive_count >= need) {
      for (std::size_t ci = 0; ci < inst.candidates.size(); ++ci) {
        if (opened[ci]) continue;
        scratch.clear();
        for (std::size_t a = 0; a < n; ++a) {
          if (alive[a]) scratch.push_back(space.dist(inst.agents[a], inst.candidates[ci]));
        }
        std::nth_element(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(need - 1),
                         scratch.end());
        const double at = scratch[need - 1];
        if (at < open_at - kTolerance) {
          open_at = at;
          open_ci = ci;
        }
      }
    }

    // Earliest remaining agent to come within reach of an open center.
    double absorb_at = kInfinity;
    std::optional<std::size_t> absorb_agent;
    for (std::size_t a = 0; a < n && !centers.empty(); ++a) {
      if (!alive[a]) continue;
      const double at = dist_to_set(space, inst.agents[a], centers);
      if (at < absorb_at - kTolerance) {
        absorb_at = at;
        absorb_agent = a;
      }
    }

    if (open_ci && leq(open_at, absorb_at)) {
      delta = std::max(delta, open_at);
      const PointId c = inst.candidates[*open_ci];
      opened[*open_ci] = true;
      TraceEvent ev{delta, EventKind::Open, c, {}, Rational(0), 0};
      for (std::size_t a = 0; a < n; ++a) {
        if (alive[a] && leq(space.dist(inst.agents[a], c), delta)) {
          alive[a] = false;
          --alive_count;
          ev.agents.push_back(a);
        }
      }
      if (centers.size() < inst.k) centers.push_back(c);
      ev.remaining = alive_count;
      sol.trace.events.push_back(std::move(ev));
    } else if (absorb_agent) {
      delta = std::max(delta, absorb_at);
      const PointId agent_point = inst.agents[*absorb_agent];
      PointId target = centers.front();
      for (PointId c : centers) {
        const double dc = space.dist(agent_point, c);
        const double dt = space.dist(agent_point, target);
        if (dc < dt - kTolerance || (leq(dc, dt) && leq(dt, dc) && c < target)) target = c;
      }
      alive[*absorb_agent] = false;
      --alive_count;
      sol.trace.events.push_back(
          TraceEvent{delta, EventKind::Absorb, target, {*absorb_agent}, Rational(0), alive_count});
    } else {
      break;
    }
  }

  sol.outcome = Outcome::of(std::move(centers), "gc");
  return sol;
}

DeductionPolicy closest_first() {
  return [](std::span<const Supporter> supporters, std::int64_t cost) {
    std::vector<Supporter> order(supporters.begin(), supporters.end());
    std::stable_sort(order.begin(), order.end(), [](const Supporter& x, const Supporter& y) {
      if (x.distance < y.distance - kTolerance) return true;
      if (y.distance < x.distance - kTolerance) return false;
      return x.agent < y.agent;
    });
    std::vector<std::pair<std::size_t, std::int64_t>> out;
    for (const Supporter& s : order) {
      if (cost == 0) break;
      const std::int64_t take = std::min(cost, s.budget);
      if (take > 0) out.emplace_back(s.agent, take);
      cost -= take;
    }
    return out;
  };
}

DeductionPolicy richest_first() {
  return [](std::span<const Supporter> supporters, std::int64_t cost) {
    std::vector<Supporter> order(supporters.begin(), supporters.end());
    std::stable_sort(order.begin(), order.end(), [](const Supporter& x, const Supporter& y) {
      if (x.budget != y.budget) return x.budget > y.budget;
      return x.agent < y.agent;
    });
    std::vector<std::pair<std::size_t, std::int64_t>> out;
    for (const Supporter& s : order) {
      if (cost == 0) break;
      const std::int64_t take = std::min(cost, s.budget);
      if (take > 0) out.emplace_back(s.agent, take);
      cost -= take;
    }
    return out;
  };
}

Solution expanding_approvals(const Instance& inst, const DeductionPolicy& policy) {
  require_candidates(inst);
  const MetricSpace& space = inst.metric();
  const std::size_t n = inst.n();
  // Budgets are kept in units of 1/n: each agent starts with k units, a candidate costs n.
  const auto cost = static_cast<std::int64_t>(n);
  std::vector<std::int64_t> budget(n, static_cast<std::int64_t>(inst.k));
  std::int64_t total = static_cast<std::int64_t>(inst.k) * cost;
  std::vector<bool> opened(inst.candidates.size(), false);
  std::vector<PointId> centers;
  Solution sol;

  auto funded = [&]() {
    return static_cast<std::size_t>(
        std::count_if(budget.begin(), budget.end(), [](std::int64_t b) { return b > 0; }));
  };

  std::vector<double> all;
  for (PointId a : inst.agents) {
    for (PointId c : inst.candidates) all.push_back(space.dist(a, c));
  }
  const std::vector<double> deltas = sorted_distinct(std::move(all));

  for (double delta : deltas) {
    for (;;) {
      if (centers.size() >= inst.k || total < cost || centers.size() == inst.candidates.size()) {
        sol.outcome = Outcome::of(std::move(centers), "ea");
        return sol;
      }
      std::optional<std::size_t> pick;
      for (std::size_t ci = 0; ci < inst.candidates.size() && !pick; ++ci) {
        if (opened[ci]) continue;
        std::int64_t pooled = 0;
        for (std::size_t a = 0; a < n; ++a) {
          if (leq(space.dist(inst.agents[a], inst.candidates[ci]), delta)) pooled += budget[a];
        }
        if (pooled >= cost) pick = ci;
      }
      if (!pick) break;

      const PointId c = inst.candidates[*pick];
      std::vector<Supporter> supporters;
      for (std::size_t a = 0; a < n; ++a) {
        const double d = space.dist(inst.agents[a], c);
        if (budget[a] > 0 && leq(d, delta)) supporters.push_back({a, d, budget[a]});
      }
      const auto deductions = policy(supporters, cost);

      std::int64_t paid = 0;
      for (auto [agent, units] : deductions) {
        const bool known = std::any_of(supporters.begin(), supporters.end(),
                                       [&](const Supporter& s) { return s.agent == agent; });
        if (!known || units <= 0 || units > budget[agent]) {
          throw Error("invalid deduction", "policy charged agent " + std::to_string(agent) +
                                               " outside its budget or approval ball");
        }
        paid += units;
      }
      if (paid != cost) throw Error("invalid deduction", "policy did not collect exactly one unit");

      opened[*pick] = true;
      centers.push_back(c);
      sol.trace.events.push_back(TraceEvent{delta, EventKind::Open, c, {}, Rational(0), funded()});
      for (auto [agent, units] : deductions) {
        budget[agent] -= units;
        total -= units;
        sol.trace.events.push_back(TraceEvent{delta, EventKind::Deduct, std::nullopt, {agent},
                                              Rational(units, cost), funded()});
      }
    }
  }
  sol.outcome = Outcome::of(std::move(centers), "ea");
  return sol;
}

Solution fair_greedy_capture(const Instance& inst, std::size_t q, std::uint64_t seed) {
  if (q == 0 || q > inst.k) {
    throw Error("invalid parameter", "fair greedy capture needs 1 <= q <= k, got q = " +
                                         std::to_string(q));
  }
  if (!agents_equal_candidates(inst)) {
    throw Error("invalid instance", "fair greedy capture requires N = C");
  }
  const MetricSpace& space = inst.metric();
  const std::size_t n = inst.n();
  const std::size_t need = quota(n, inst.k, q);
  // With n < k the quota can drop below q; a ball then contributes all it deletes.
  const std::size_t picks = std::min(q, need);

  std::mt19937_64 rng(seed);
  std::vector<bool> alive(n, true);
  std::vector<bool> chosen(n, false);
  std::size_t alive_count = n;
  std::vector<PointId> centers;
  Solution sol;
  double delta = 0;
  std::vector<double> scratch;

  while (alive_count >= need) {
    double best = kInfinity;
    std::size_t anchor = 0;
    for (std::size_t p = 0; p < n; ++p) {
      if (!alive[p]) continue;
      scratch.clear();
      for (std::size_t a = 0; a < n; ++a) {
        if (alive[a]) scratch.push_back(space.dist(inst.agents[p], inst.agents[a]));
      }
      std::nth_element(scratch.begin(), scratch.begin() + static_cast<std::ptrdiff_t>(need - 1),
                       scratch.end());
      if (scratch[need - 1] < best - kTolerance) {
        best = scratch[need - 1];
        anchor = p;
      }
    }
    delta = std::max(delta, best);
    const PointId anchor_point = inst.agents[anchor];

    std::vector<std::size_t> in_ball;
    for (std::size_t a = 0; a < n; ++a) {
      if (alive[a] && leq(space.dist(anchor_point, inst.agents[a]), delta)) in_ball.push_back(a);
    }
    const std::vector<std::size_t> selected = sample(in_ball, picks, rng);

    // Delete the selected agents plus the ones closest to the anchor, up to the quota.
    std::vector<std::size_t> rest;
    for (std::size_t a : in_ball) {
      if (!std::binary_search(selected.begin(), selected.end(), a)) rest.push_back(a);
    }
    std::stable_sort(rest.begin(), rest.end(), [&](std::size_t x, std::size_t y) {
      return space.dist(anchor_point, inst.agents[x]) < space.dist(anchor_point, inst.agents[y]);
    });
    std::vector<std::size_t> deleted = selected;
    for (std::size_t i = 0; deleted.size() < need && i < rest.size(); ++i) deleted.push_back(rest[i]);
    std::sort(deleted.begin(), deleted.end());
    for (std::size_t a : deleted) {
      alive[a] = false;
      --alive_count;
    }
    sol.trace.events.push_back(
        TraceEvent{delta, EventKind::Capture, anchor_point, deleted, Rational(0), alive_count});
    for (std::size_t a : selected) {
      chosen[a] = true;
      centers.push_back(inst.agents[a]);
      sol.trace.events.push_back(
          TraceEvent{delta, EventKind::Open, inst.agents[a], {a}, Rational(0), alive_count});
    }
  }

  // Final sampling step: top W up to k with uniformly random unselected agents.
  if (centers.size() < inst.k) {
    std::vector<std::size_t> pool;
    for (std::size_t a = 0; a < n; ++a) {
      if (!chosen[a]) pool.push_back(a);
    }
    for (std::size_t a : sample(pool, inst.k - centers.size(), rng)) {
      centers.push_back(inst.agents[a]);
      sol.trace.events.push_back(
          TraceEvent{delta, EventKind::Fill, inst.agents[a], {a}, Rational(0), alive_count});
    }
  }

  sol.outcome = Outcome::of(std::move(centers),
                            "fgc(q=" + std::to_string(q) + ",seed=" + std::to_string(seed) + ")");
  return sol;
}

Solution restricted_solve(const Instance& inst, Rule rule) {
  if (!agents_subset_of_candidates(inst)) {
    throw Error("invalid instance", "restricted mode requires every agent to be a candidate");
  }
  std::vector<PointId> own = inst.agents;
  std::sort(own.begin(), own.end());
  own.erase(std::unique(own.begin(), own.end()), own.end());
  const Instance restricted = inst.with_candidates(std::move(own));
  Solution sol = rule == Rule::GreedyCapture ? greedy_capture(restricted)
                                             : expanding_approvals(restricted);
  sol.outcome.origin += "-restricted";
  return sol;
}

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Open: return "open";
    case EventKind::Absorb: return "absorb";
    case EventKind::Deduct: return "deduct";
    case EventKind::Capture: return "capture";
    case EventKind::Fill: return "fill";
  }
  return "open";
}

EventKind parse_event_kind(const std::string& tag) {
  for (EventKind k : {EventKind::Open, EventKind::Absorb, EventKind::Deduct, EventKind::Capture,
                      EventKind::Fill}) {
    if (tag == to_string(k)) return k;
  }
  throw Error("invalid trace", "unknown event kind '" + tag + "'");
}

}  // namespace propclust
