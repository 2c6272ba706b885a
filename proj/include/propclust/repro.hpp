#pragma once

#include <string>
#include <vector>

#include "propclust/fixtures.hpp"
#include "propclust/io.hpp"

namespace propclust {

/// One fixture claim checked against the auditor's output.
struct ReproRow {
  std::string fixture;  // fixture id and case, e.g. "fig2a k=4 W={1,2,6,7}"
  std::string notion;
  std::string params;
  std::string expected;
  std::string computed;
  std::string status;
  bool match = false;
};

/// Audits every expectation of the given fixtures.
std::vector<ReproRow> run_repro(const std::vector<std::string>& fixture_ids);

/// True when `report` satisfies `e`.
bool meets(const Expectation& e, const AuditReport& report);
std::string describe(const Expectation& e);
std::string describe_params(const AuditParams& params);

Json repro_to_json(const std::vector<ReproRow>& rows);
/// Columns: fixture, notion, params, expected, computed, status, match.
std::string repro_to_csv(const std::vector<ReproRow>& rows);

}  // namespace propclust
