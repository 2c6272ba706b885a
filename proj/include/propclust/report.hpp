#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "propclust/metric.hpp"
#include "propclust/rational.hpp"

namespace propclust {

enum class Notion {
  ProportionalFairness,
  IndividualFairness,
  TransferableCore,
  QCore,
  QIndividualFairness,
  QTransferableCore,
  RankJR,
  RankPJR,
  RankPJRPlus,
  DPRF,
  UPRF,
};

/// Exact unless an enumeration cap stopped the search early.
enum class AuditStatus { Exact, CapExhausted };

struct AuditParams {
  std::optional<Rational> gamma;
  std::optional<std::size_t> q;
  std::optional<std::size_t> size_cap;

  friend bool operator==(const AuditParams&, const AuditParams&) = default;
};

/// The concrete object behind a reported value or violation.
struct Witness {
  /// Agent indices of the deviating / cohesive group (or the single binding agent).
  std::vector<std::size_t> agents;
  /// Deviation target(s): the candidate c, the set C', the cohesive set T.
  std::vector<PointId> candidates;
  /// Rank axioms: winners approved by some group member at the threshold.
  std::vector<PointId> covered;
  std::optional<double> threshold;
  std::optional<std::size_t> ell;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct AuditReport {
  Notion notion = Notion::ProportionalFairness;
  AuditParams params;
  /// Minimal alpha / beta for approximation notions; may be +inf.
  std::optional<double> value;
  /// Verdict for pass/fail notions; unset when caps ran out before a verdict.
  std::optional<bool> passed;
  std::optional<Witness> witness;
  AuditStatus status = AuditStatus::Exact;

  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

const char* to_string(Notion notion);
Notion parse_notion(const std::string& tag);
const char* to_string(AuditStatus status);
AuditStatus parse_status(const std::string& tag);

/// True for rank-JR/PJR/PJR+, DPRF and UPRF.
bool is_verdict_notion(Notion notion);

}  // namespace propclust
