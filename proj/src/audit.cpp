#include "propclust/audit.hpp"

#include <cmath>
#include <cstdio>

namespace propclust {

AuditReport run_audit(const Instance& inst, const Outcome& w, Notion notion,
                      const AuditParams& params, const RankCaps& caps, unsigned threads) {
  const Rational gamma = params.gamma.value_or(Rational(1));
  const std::size_t q = params.q.value_or(1);
  switch (notion) {
    case Notion::ProportionalFairness: return pf_min_alpha(inst, w);
    case Notion::IndividualFairness: return if_min_beta(inst, w);
    case Notion::TransferableCore: return tc_min_alpha(inst, w, gamma);
    case Notion::QCore: return q_core_min_alpha(inst, w, q, params.size_cap, threads);
    case Notion::QIndividualFairness: return q_if_min_beta(inst, w, q);
    case Notion::QTransferableCore: return q_tc_min_alpha(inst, w, q, gamma, params.size_cap, threads);
    case Notion::RankJR: return rank_jr_check(inst, w);
    case Notion::RankPJR: return rank_pjr_check(inst, w, caps);
    case Notion::RankPJRPlus: return rank_pjr_plus_check(inst, w, caps);
    case Notion::DPRF: return dprf_check(inst, w, caps);
    case Notion::UPRF: return uprf_check(inst, w, caps);
  }
  return {};
}

std::string format_value(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == std::floor(v) && std::fabs(v) < 1e15) return std::to_string(static_cast<long long>(v));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace propclust
