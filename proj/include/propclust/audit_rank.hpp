#pragma once

#include <cstddef>
#include <vector>

#include "propclust/instance.hpp"
#include "propclust/report.hpp"

namespace propclust {

/// Enumeration limits for the rank axioms. Hitting either one without finding a
/// violation yields passed = unset and status CapExhausted, never a pass.
struct RankCaps {
  /// Largest ell examined; ell ranges over 1..min(k, max_ell).
  std::size_t max_ell = 10;
  /// Search nodes (cohesive-set extensions, clique branches) across the whole audit.
  std::size_t node_budget = 1'000'000;
};

/// Sorted distinct agent-candidate distances. Approval sets B(i,y) cap C only change
/// at these values, so auditing there covers every y.
std::vector<double> thresholds(const Instance& inst);
/// Sorted distinct agent-agent distances (0 included); the binding y of a UPRF group
/// is its diameter.
std::vector<double> agent_thresholds(const Instance& inst);

/// rank-JR: at every y, no candidate is approved by quota(n,k,1) agents who approve no winner.
AuditReport rank_jr_check(const Instance& inst, const Outcome& w);

/// rank-PJR by enumerating (y, ell, cover Y subset W with |Y| = min(ell-1,|W|), cohesive T):
/// a violating group N' exists iff for some such tuple the agents with T subset A_i and
/// A_i cap W subset Y number at least quota(n,k,ell).
AuditReport rank_pjr_check(const Instance& inst, const Outcome& w, const RankCaps& caps = {});

/// rank-PJR+: as rank-PJR with T replaced by a single unopened candidate.
AuditReport rank_pjr_plus_check(const Instance& inst, const Outcome& w, const RankCaps& caps = {});

/// DPRF coincides with rank-PJR; same search, tagged DPRF.
AuditReport dprf_check(const Instance& inst, const Outcome& w, const RankCaps& caps = {});

/// UPRF: for each agent-agent distance y, ell and cover Y, a clique of quota(n,k,ell)
/// agents with pairwise distance <= y among those whose y-ball meets W only inside Y.
AuditReport uprf_check(const Instance& inst, const Outcome& w, const RankCaps& caps = {});

/// Re-checks a violation witness against the axiom's definition from scratch.
bool confirms_violation(const Instance& inst, const Outcome& w, const AuditReport& report);

}  // namespace propclust
