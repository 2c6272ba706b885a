#include "propclust/report.hpp"

#include <array>
#include <utility>

#include "propclust/error.hpp"

namespace propclust {

namespace {

constexpr std::array<std::pair<Notion, const char*>, 11> kNotionTags{{
    {Notion::ProportionalFairness, "pf"},
    {Notion::IndividualFairness, "if"},
    {Notion::TransferableCore, "tc"},
    {Notion::QCore, "qcore"},
    {Notion::QIndividualFairness, "qif"},
    {Notion::QTransferableCore, "qtc"},
    {Notion::RankJR, "rank-jr"},
    {Notion::RankPJR, "rank-pjr"},
    {Notion::RankPJRPlus, "rank-pjr+"},
    {Notion::DPRF, "dprf"},
    {Notion::UPRF, "uprf"},
}};

}  // namespace

const char* to_string(Notion notion) {
  for (const auto& [n, tag] : kNotionTags) {
    if (n == notion) return tag;
  }
  return "?";
}

Notion parse_notion(const std::string& tag) {
  for (const auto& [n, t] : kNotionTags) {
    if (tag == t) return n;
  }
  throw Error("invalid input", "unknown notion '" + tag + "'");
}

const char* to_string(AuditStatus status) {
  return status == AuditStatus::Exact ? "exact" : "cap_exhausted";
}

AuditStatus parse_status(const std::string& tag) {
  if (tag == "exact") return AuditStatus::Exact;
  if (tag == "cap_exhausted") return AuditStatus::CapExhausted;
  throw Error("invalid input", "unknown audit status '" + tag + "'");
}

bool is_verdict_notion(Notion notion) {
  switch (notion) {
    case Notion::RankJR:
    case Notion::RankPJR:
    case Notion::RankPJRPlus:
    case Notion::DPRF:
    case Notion::UPRF:
      return true;
    default:
      return false;
  }
}

}  // namespace propclust
