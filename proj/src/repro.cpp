#include "propclust/repro.hpp"

#include <cmath>

#include "propclust/audit.hpp"
#include "propclust/error.hpp"

namespace propclust {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string computed_text(const AuditReport& r) {
  if (is_verdict_notion(r.notion)) {
    if (!r.passed) return "unknown";
    return *r.passed ? "pass" : "violation";
  }
  return r.value ? format_value(*r.value) : "none";
}

}  // namespace

bool meets(const Expectation& e, const AuditReport& report) {
  switch (e.kind) {
    case Expect::Pass: return report.passed == true;
    case Expect::Fail: return report.passed == false;
    default: break;
  }
  if (!report.value) return false;
  const double v = *report.value;
  switch (e.kind) {
    case Expect::Equal: return std::fabs(v - e.target) <= e.tolerance;
    case Expect::AtLeast: return v >= e.target - e.tolerance;
    case Expect::AtMost: return v <= e.target + e.tolerance;
    case Expect::Above: return v > e.target + e.tolerance;
    case Expect::WithinRel: return std::fabs(v - e.target) <= e.tolerance * e.target;
    case Expect::Infinite: return std::isinf(v);
    case Expect::Finite: return std::isfinite(v);
    default: return false;
  }
}

std::string describe(const Expectation& e) {
  switch (e.kind) {
    case Expect::Equal: return "= " + e.target_text;
    case Expect::AtLeast: return ">= " + e.target_text;
    case Expect::AtMost: return "<= " + e.target_text;
    case Expect::Above: return "> " + e.target_text;
    case Expect::WithinRel: return e.target_text + " +-" + format_value(e.tolerance * 100) + "%";
    case Expect::Infinite: return "inf";
    case Expect::Finite: return "finite";
    case Expect::Pass: return "pass";
    case Expect::Fail: return "violation";
  }
  return "?";
}

std::string describe_params(const AuditParams& params) {
  std::string out;
  auto add = [&](const std::string& s) { out += (out.empty() ? "" : ";") + s; };
  if (params.q) add("q=" + std::to_string(*params.q));
  if (params.gamma) add("gamma=" + to_string(*params.gamma));
  if (params.size_cap) add("cap=" + std::to_string(*params.size_cap));
  return out;
}

std::vector<ReproRow> run_repro(const std::vector<std::string>& fixture_ids) {
  std::vector<ReproRow> rows;
  for (const auto& id : fixture_ids) {
    const Fixture f = make_fixture(id);
    for (const FixtureCase& c : f.cases) {
      const Instance inst = f.instance.with_k(c.k);
      for (const Expectation& e : c.expectations) {
        ReproRow row;
        row.fixture = f.id + " " + c.name;
        row.notion = to_string(e.notion);
        row.params = describe_params(e.params);
        row.expected = describe(e);
        try {
          const AuditReport report = run_audit(inst, c.outcome, e.notion, e.params);
          row.computed = computed_text(report);
          row.status = to_string(report.status);
          row.match = meets(e, report);
        } catch (const Error& err) {
          row.computed = std::string("error: ") + err.what();
          row.status = "error";
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

Json repro_to_json(const std::vector<ReproRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back({{"fixture", r.fixture},
                   {"notion", r.notion},
                   {"params", r.params},
                   {"expected", r.expected},
                   {"computed", r.computed},
                   {"status", r.status},
                   {"match", r.match}});
  }
  return out;
}

std::string repro_to_csv(const std::vector<ReproRow>& rows) {
  std::string out = "fixture,notion,params,expected,computed,status,match\n";
  for (const auto& r : rows) {
    out += csv_field(r.fixture) + "," + csv_field(r.notion) + "," + csv_field(r.params) + "," +
           csv_field(r.expected) + "," + csv_field(r.computed) + "," + csv_field(r.status) + "," +
           (r.match ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace propclust
