#pragma once

#include <cstddef>
#include <optional>

#include "propclust/instance.hpp"
#include "propclust/report.hpp"

namespace propclust {

/// Largest candidate-subset size enumerated when the caller gives no cap.
inline constexpr std::size_t kDefaultSizeCapLimit = 6;

/// min(k, |C|, 6).
std::size_t default_size_cap(const Instance& inst);

/// Smallest alpha >= 1 such that W is in the alpha-q-core, over deviations C' with
/// q <= |C'| <= size_cap. The binding ell for a fixed C' is |C'| (a larger ell only
/// raises the group quota), so each C' is scored by the quota(n,k,|C'|)-th largest
/// ratio d^q(i,W)/d^q(i,C'). d^q(i,W) is +inf when |W| < q.
///
/// Status is CapExhausted when size_cap < min(k,|C|); the value is then a lower bound.
/// `threads` > 1 splits the C' stream; the merge keeps the first maximizer in
/// enumeration order, so the report does not depend on the split.
/// Without a cap the enumeration runs up to max(q, default_size_cap). Throws Error when
/// q = 0, q > k or an explicit size_cap < q.
AuditReport q_core_min_alpha(const Instance& inst, const Outcome& w, std::size_t q,
                             std::optional<std::size_t> size_cap = std::nullopt,
                             unsigned threads = 1);

/// Smallest beta >= 1 with d^q(i,W) <= beta * r^q(i) for every agent, where r^q(i)
/// encloses quota(n,k,q) agents around i. Requires N subset C, k <= n and q <= |W|.
AuditReport q_if_min_beta(const Instance& inst, const Outcome& w, std::size_t q);

/// Smallest alpha >= 1 such that W is in the (gamma, alpha)-q-transferable core over
/// C' with q <= |C'| <= size_cap, each scored by the subset-ratio maximization with
/// group quota quota(n,k,|C'|,gamma).
AuditReport q_tc_min_alpha(const Instance& inst, const Outcome& w, std::size_t q,
                           const Rational& gamma,
                           std::optional<std::size_t> size_cap = std::nullopt,
                           unsigned threads = 1);

/// Minimum over the group of d^q(i,W)/d^q(i,C') for a q-core witness.
double evaluate_qcore_witness(const Instance& inst, const Outcome& w, std::size_t q,
                              const Witness& witness);
/// sum d^q(i,W) / sum d^q(i,C') for a q-TC witness.
double evaluate_qtc_witness(const Instance& inst, const Outcome& w, std::size_t q,
                            const Witness& witness);

}  // namespace propclust
