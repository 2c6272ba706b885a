#pragma once

#include "propclust/audit_multi.hpp"
#include "propclust/audit_rank.hpp"
#include "propclust/audit_single.hpp"

namespace propclust {

/// Runs the auditor for `notion`. Missing parameters default to gamma = 1, q = 1 and
/// the default size cap.
AuditReport run_audit(const Instance& inst, const Outcome& w, Notion notion,
                      const AuditParams& params = {}, const RankCaps& caps = {},
                      unsigned threads = 1);

/// Compact rendering of an audit value: "inf", integers without a fraction, else 10 digits.
std::string format_value(double v);

}  // namespace propclust
