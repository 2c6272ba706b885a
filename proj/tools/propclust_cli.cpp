#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "propclust/algorithms.hpp"
#include "propclust/audit.hpp"
#include "propclust/error.hpp"
#include "propclust/fixtures.hpp"
#include "propclust/generate.hpp"
#include "propclust/io.hpp"
#include "propclust/repro.hpp"

using namespace propclust;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitInexact = 3;

struct Source {
  std::string input;
  std::string fixture;
  std::optional<std::size_t> k;
};

void add_source(CLI::App* cmd, Source& src) {
  auto* in = cmd->add_option("--input", src.input, "Instance JSON file");
  auto* fx = cmd->add_option("--fixture", src.fixture, "Embedded fixture id, e.g. fig3a or fig4a(2)");
  in->excludes(fx);
  cmd->add_option("--k", src.k, "Override the committee size");
}

/// The instance plus, for fixtures, the outcome of their first case.
std::pair<Instance, std::optional<Outcome>> load(const Source& src) {
  std::optional<Outcome> outcome;
  Instance inst;
  if (!src.fixture.empty()) {
    Fixture f = make_fixture(src.fixture);
    inst = f.instance;
    outcome = f.cases.front().outcome;
  } else if (!src.input.empty()) {
    inst = instance_from_json(read_json_file(src.input));
  } else {
    throw Error("invalid input", "one of --input or --fixture is required");
  }
  if (src.k) inst = inst.with_k(*src.k);
  return {std::move(inst), std::move(outcome)};
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("invalid input", "cannot write '" + path + "'");
  out << text;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" {"));
    item.erase(item.find_last_not_of(" }") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

struct SolveArgs {
  Source src;
  std::string alg = "gc";
  std::size_t q = 1;
  std::uint64_t seed = 0;
  bool trace = false;
  std::string output;
};

int run_solve(const SolveArgs& a) {
  const Instance inst = load(a.src).first;
  Solution sol;
  if (a.alg == "gc") {
    sol = greedy_capture(inst);
  } else if (a.alg == "ea") {
    sol = expanding_approvals(inst);
  } else if (a.alg == "fgc") {
    sol = fair_greedy_capture(inst, a.q, a.seed);
  } else if (a.alg == "gc-restricted") {
    sol = restricted_solve(inst, Rule::GreedyCapture);
  } else if (a.alg == "ea-restricted") {
    sol = restricted_solve(inst, Rule::ExpandingApprovals);
  } else {
    throw Error("invalid input", "unknown algorithm '" + a.alg + "'");
  }
  Json out{{"W", sol.outcome.centers}, {"alg", sol.outcome.origin}, {"seed", a.seed}};
  if (a.trace) out["trace"] = trace_to_json(sol.trace);
  emit(dump(out), a.output);
  return kExitOk;
}

struct AuditArgs {
  Source src;
  std::string notion;
  std::string gamma;
  std::optional<std::size_t> q;
  std::optional<std::size_t> cap;
  std::string outcome;
  std::string w;
  bool require_exact = false;
  std::size_t max_ell = RankCaps{}.max_ell;
  std::size_t node_budget = RankCaps{}.node_budget;
  unsigned threads = 1;
  std::string output;
};

int run_audit_cmd(const AuditArgs& a) {
  auto [inst, fixture_outcome] = load(a.src);
  Outcome w;
  if (!a.outcome.empty()) {
    w = outcome_from_json(read_json_file(a.outcome));
  } else if (!a.w.empty()) {
    std::vector<PointId> ids;
    for (const auto& label : split_list(a.w)) ids.push_back(point_of(inst, label));
    w = Outcome::of(std::move(ids));
  } else if (fixture_outcome) {
    w = *fixture_outcome;
  } else {
    throw Error("invalid input", "an outcome is required (--outcome or --W)");
  }
  if (auto violations = validate(inst, w); !violations.empty()) {
    throw Error("invalid outcome", violations.front().kind + ": " + violations.front().message);
  }
  AuditParams params;
  if (!a.gamma.empty()) params.gamma = parse_rational(a.gamma);
  params.q = a.q;
  params.size_cap = a.cap;
  const Notion notion = parse_notion(a.notion);
  const AuditReport report = run_audit(inst, w, notion, params, RankCaps{a.max_ell, a.node_budget}, a.threads);
  emit(dump(report_to_json(report)), a.output);
  if (a.require_exact && report.status == AuditStatus::CapExhausted) return kExitInexact;
  if (report.passed == false) return kExitViolation;
  return kExitOk;
}

int run_repro_cmd(const std::string& which, const std::string& format, const std::string& output) {
  const auto ids = which == "all" ? fixture_ids() : std::vector<std::string>{which};
  const auto rows = run_repro(ids);
  if (format == "csv") {
    emit(repro_to_csv(rows), output);
  } else {
    emit(dump(repro_to_json(rows)), output);
  }
  const bool all = std::all_of(rows.begin(), rows.end(), [](const ReproRow& r) { return r.match; });
  return all ? kExitOk : kExitViolation;
}

void report_error(const std::string& code, const std::string& message) {
  std::cerr << Json{{"error", code}, {"message", message}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proportional clustering: solve, audit and reproduce worked examples"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Run a clustering rule");
  add_source(solve_cmd, solve.src);
  solve_cmd->add_option("--alg", solve.alg, "gc | ea | fgc | gc-restricted | ea-restricted")
      ->check(CLI::IsMember({"gc", "ea", "fgc", "gc-restricted", "ea-restricted"}));
  solve_cmd->add_option("--q", solve.q, "Centers per captured ball (fgc)");
  solve_cmd->add_option("--seed", solve.seed, "Random seed (fgc)");
  solve_cmd->add_flag("--trace", solve.trace, "Include the event trace");
  solve_cmd->add_option("--output", solve.output, "Output file (default stdout)");

  AuditArgs audit;
  auto* audit_cmd = app.add_subcommand("audit", "Audit an outcome against a fairness notion");
  add_source(audit_cmd, audit.src);
  audit_cmd->add_option("--notion", audit.notion, "pf | if | tc | qcore | qif | qtc | rank-jr | rank-pjr | rank-pjr+ | dprf | uprf")
      ->required();
  audit_cmd->add_option("--gamma", audit.gamma, "Group scaling for tc / qtc, e.g. 3/2");
  audit_cmd->add_option("--q", audit.q, "q for qcore / qif / qtc");
  audit_cmd->add_option("--cap", audit.cap, "Largest deviating candidate set for qcore / qtc");
  auto* outcome_opt = audit_cmd->add_option("--outcome", audit.outcome, "Outcome JSON ({\"W\": [...]})");
  audit_cmd->add_option("--W", audit.w, "Outcome as comma-separated point labels")->excludes(outcome_opt);
  audit_cmd->add_flag("--require-exact", audit.require_exact, "Exit 3 if an enumeration cap was hit");
  audit_cmd->add_option("--max-ell", audit.max_ell, "Largest ell for the rank axioms");
  audit_cmd->add_option("--node-budget", audit.node_budget, "Search node budget for the rank axioms");
  audit_cmd->add_option("--threads", audit.threads, "Worker threads for qcore / qtc");
  audit_cmd->add_option("--output", audit.output, "Output file (default stdout)");

  std::string repro_case = "all";
  std::string repro_format = "json";
  std::string repro_output;
  auto* repro_cmd = app.add_subcommand("repro", "Check the embedded worked examples");
  repro_cmd->add_option("--case", repro_case, "Fixture id or all");
  repro_cmd->add_option("--format", repro_format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  repro_cmd->add_option("--output", repro_output, "Output file (default stdout)");

  std::string family;
  std::size_t gen_n = 10;
  std::size_t gen_k = 2;
  std::uint64_t gen_seed = 0;
  std::string gen_output;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--family", family, "euclidean | graph | blocks")->required();
  gen_cmd->add_option("--n", gen_n, "Number of agents");
  gen_cmd->add_option("--k", gen_k, "Committee size");
  gen_cmd->add_option("--seed", gen_seed, "Random seed");
  gen_cmd->add_option("--output", gen_output, "Output file (default stdout)");

  std::string fixture_case;
  std::string fixture_output;
  auto* fixture_cmd = app.add_subcommand("fixture", "Print an embedded fixture as an instance file");
  fixture_cmd->add_option("--case", fixture_case, "Fixture id")->required();
  fixture_cmd->add_option("--output", fixture_output, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    report_error("invalid input", e.what());
    return kExitInvalid;
  }

  try {
    if (*solve_cmd) return run_solve(solve);
    if (*audit_cmd) return run_audit_cmd(audit);
    if (*repro_cmd) return run_repro_cmd(repro_case, repro_format, repro_output);
    if (*gen_cmd) {
      emit(dump(instance_to_json(generate(parse_family(family), gen_n, gen_k, gen_seed))), gen_output);
      return kExitOk;
    }
    if (*fixture_cmd) {
      emit(dump(instance_to_json(make_fixture(fixture_case).instance)), fixture_output);
      return kExitOk;
    }
  } catch (const Error& e) {
    report_error(e.code(), e.what());
    return kExitInvalid;
  } catch (const Json::exception& e) {
    report_error("invalid input", e.what());
    return kExitInvalid;
  }
  return kExitInvalid;
}
