#pragma once

#include <string>
#include <vector>

#include "propclust/instance.hpp"
#include "propclust/report.hpp"

namespace propclust {

/// How a computed audit result is compared with the figure's claim.
enum class Expect {
  Equal,      // value == target (within tolerance)
  AtLeast,    // value >= target
  AtMost,     // value <= target
  Above,      // value > target
  WithinRel,  // |value - target| <= tolerance * target
  Infinite,
  Finite,
  Pass,
  Fail,
};

struct Expectation {
  Notion notion = Notion::ProportionalFairness;
  AuditParams params;
  Expect kind = Expect::Equal;
  double target = 0;
  double tolerance = 1e-9;
  /// Exact rendering of the target for tables, e.g. "10/3".
  std::string target_text;
};

struct FixtureCase {
  std::string name;  // e.g. "k=5 W={1,2,3,6,9}"
  std::size_t k = 1;
  Outcome outcome;
  std::vector<Expectation> expectations;
};

/// A worked example with its instance (labels follow the figure), the outcomes discussed
/// for it and the verdicts stated for those outcomes.
struct Fixture {
  std::string id;
  Instance instance;  // k set to the first case's k
  std::vector<FixtureCase> cases;
  std::string notes;
};

/// Builds a fixture from its id: fig2a, fig2b, fig3a, fig3b, fig4a(alpha), fig4b(beta),
/// fig4c(beta), path_uprf, lb_tc(alpha,gamma,n,k), qtc_blocks(q,n,k). Parameters may be
/// omitted to get the defaults listed by fixture_ids(). Throws Error on unknown ids.
Fixture make_fixture(const std::string& id);

/// Every fixture with its default parameters, in corpus order.
std::vector<std::string> fixture_ids();

/// Point id of the point labelled `label` in the fixture instance.
PointId point_of(const Instance& inst, const std::string& label);
/// Outcome from figure labels.
Outcome outcome_of(const Instance& inst, const std::vector<std::string>& labels);

}  // namespace propclust
