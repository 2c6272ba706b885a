#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "propclust/instance.hpp"

namespace propclust {

enum class EventKind {
  Open,     // candidate added to W; `agents` lists the agents captured with it (GC)
  Absorb,   // a remaining agent falls within delta of an open center
  Deduct,   // budget taken from an agent (EA)
  Capture,  // a ball around `center` reached the quota; `agents` are deleted (FGC)
  Fill,     // final uniform sampling after all captures (FGC)
};

struct TraceEvent {
  double delta = 0;
  EventKind kind = EventKind::Open;
  /// Candidate opened, absorbing center, or ball anchor; unset for Deduct.
  std::optional<PointId> center;
  /// Agent indices touched by the event.
  std::vector<std::size_t> agents;
  /// Budget removed, as a fraction of one candidate's cost (Deduct only).
  Rational amount{0};
  /// Agents still in play after the event (budget > 0 for EA).
  std::size_t remaining = 0;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct Trace {
  std::vector<TraceEvent> events;
  friend bool operator==(const Trace&, const Trace&) = default;
};

struct Solution {
  Outcome outcome;
  Trace trace;
};

/// Greedy capture: sweep delta upward, open a candidate once quota(n,k,1) remaining
/// agents lie within delta of it, and absorb agents that come within delta of an open
/// center. Ties: Open before Absorb, then lowest candidate / agent index.
Solution greedy_capture(const Instance& inst);

/// An agent that approves the candidate being opened in expanding approvals.
struct Supporter {
  std::size_t agent = 0;
  double distance = 0;
  /// Remaining budget in units of 1/n (every agent starts with k units).
  std::int64_t budget = 0;
};

/// Splits a cost (in units of 1/n) across supporters. Returns (agent, units) pairs whose
/// units sum to `cost` and never exceed a supporter's budget.
using DeductionPolicy =
    std::function<std::vector<std::pair<std::size_t, std::int64_t>>(std::span<const Supporter>, std::int64_t cost)>;

/// Zero out supporters in order of distance (ties by agent index) until the cost is paid.
DeductionPolicy closest_first();
/// Zero out supporters with the largest remaining budget first (ties by agent index).
DeductionPolicy richest_first();

/// Expanding approvals with budgets k/n per agent and unit cost per opened candidate.
Solution expanding_approvals(const Instance& inst, const DeductionPolicy& policy = closest_first());

/// Fair greedy capture for N = C. Each captured ball of quota(n,k,q) remaining agents
/// contributes q uniformly random members to W; W is then filled uniformly up to k.
/// Throws Error when q = 0, q > k or N != C.
Solution fair_greedy_capture(const Instance& inst, std::size_t q, std::uint64_t seed);

enum class Rule { GreedyCapture, ExpandingApprovals };

/// Runs `rule` with the candidate set replaced by the agents' points (requires N subset C).
Solution restricted_solve(const Instance& inst, Rule rule);

const char* to_string(EventKind kind);
EventKind parse_event_kind(const std::string& tag);

}  // namespace propclust
