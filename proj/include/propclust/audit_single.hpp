#pragma once

#include <span>
#include <vector>

#include "propclust/instance.hpp"
#include "propclust/report.hpp"

namespace propclust {

/// Smallest alpha >= 1 for which W is alpha-proportionally fair.
///
/// For every unopened candidate c the agents' ratios d(i,W)/d(i,c) are ranked and the
/// quota(n,k,1)-th largest is the best improvement a quota-sized group can all reach.
/// The witness is the binding candidate with its top-quota agents; it is omitted when
/// no group improves at all (value 1).
AuditReport pf_min_alpha(const Instance& inst, const Outcome& w);

/// Smallest beta >= 1 with d(i,W) <= beta * r(i) for all agents, where r(i) is the
/// radius enclosing quota(n,k,1) agents around i. Requires N subset C ("IF undefined").
AuditReport if_min_beta(const Instance& inst, const Outcome& w);

/// Smallest alpha >= 1 such that W is in the (gamma, alpha)-transferable core, found per
/// unopened candidate by Dinkelbach iteration over the group-size-constrained subset ratio.
AuditReport tc_min_alpha(const Instance& inst, const Outcome& w, const Rational& gamma);

/// Result of maximizing sum(num[S]) / sum(den[S]) over subsets with |S| >= min_size.
struct SubsetRatio {
  double value = 0;              // +inf when a feasible S has zero denominator and positive numerator
  std::vector<std::size_t> set;  // maximizer, sorted; empty when no feasible S exists
};

/// Dinkelbach iteration: at level t take the top `min_size` values of num - t*den plus every
/// further positive one, move t to the ratio of that set, stop at the fixed point.
/// Requires non-negative inputs.
SubsetRatio max_subset_ratio(std::span<const double> num, std::span<const double> den,
                             std::size_t min_size);

/// Minimum over the group of d(i,W)/d(i,c), i.e. the improvement factor a PF witness certifies.
double evaluate_pf_witness(const Instance& inst, const Outcome& w, const Witness& witness);
/// sum d(i,W) / sum d(i,c) over the witness group.
double evaluate_tc_witness(const Instance& inst, const Outcome& w, const Witness& witness);

}  // namespace propclust
