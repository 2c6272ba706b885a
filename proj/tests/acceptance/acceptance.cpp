// Acceptance suite: one PASS/FAIL line per criterion, failed sub-checks listed above it.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "oracle.hpp"
#include "propclust/algorithms.hpp"
#include "propclust/audit.hpp"
#include "propclust/audit_multi.hpp"
#include "propclust/audit_rank.hpp"
#include "propclust/audit_single.hpp"
#include "propclust/fixtures.hpp"
#include "propclust/io.hpp"

using namespace propclust;

namespace {

constexpr double kTau = 1e-9;

class Criterion {
 public:
  explicit Criterion(std::string title) : title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (failures_ <= 12) std::printf("    - %s\n", what.c_str());
  }

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  bool finish(int number, double time_limit) {
    const double t = seconds();
    if (t > time_limit) {
      ++failures_;
      std::printf("    - took %.2f s, limit %.0f s\n", t, time_limit);
    }
    if (failures_ > 12) std::printf("    - ... %zu failed checks in total\n", failures_);
    std::printf("%s criterion %d: %s (%zu checks, %.2f s)\n", failures_ == 0 ? "PASS" : "FAIL", number,
                title_.c_str(), checks_, t);
    std::fflush(stdout);
    return failures_ == 0;
  }

 private:
  std::string title_;
  std::chrono::steady_clock::time_point start_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
};

std::string fmt(double v) { return format_value(v); }

bool same(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= kTau * std::max(1.0, std::abs(b));
}

std::size_t agent_of(const Instance& inst, const std::string& label) {
  const PointId p = point_of(inst, label);
  return static_cast<std::size_t>(std::find(inst.agents.begin(), inst.agents.end(), p) - inst.agents.begin());
}

std::vector<std::size_t> agents_of(const Instance& inst, const std::vector<std::string>& labels) {
  std::vector<std::size_t> out;
  for (const auto& l : labels) out.push_back(agent_of(inst, l));
  std::sort(out.begin(), out.end());
  return out;
}

std::string tag(const testing_support::CorpusItem& item, const std::string& what) {
  return "seed " + std::to_string(item.seed) + ": " + what;
}

bool paper_examples() {
  Criterion c("worked examples on the figure instances");
  const Fixture f2a = make_fixture("fig2a");
  {
    const Instance inst = f2a.instance.with_k(5);
    const Outcome w = outcome_of(inst, {"1", "2", "3", "6", "9"});
    const AuditReport pf = pf_min_alpha(inst, w);
    c.check(pf.value == 1.0, "fig2a k=5: pf = " + fmt(*pf.value) + ", expected 1");
    const AuditReport core = q_core_min_alpha(inst, w, 3);
    c.check(core.status == AuditStatus::Exact, "fig2a k=5: 3-core enumeration not exact");
    c.check(same(*core.value, 10.0 / 3.0), "fig2a k=5: 3-core = " + fmt(*core.value) + ", expected 10/3");
    const Outcome target = outcome_of(inst, {"6", "9", "10"});
    c.check(core.witness && core.witness->candidates == target.centers,
            "fig2a k=5: 3-core witness C' is not {6,9,10}");
  }
  {
    const Instance inst = f2a.instance.with_k(4);
    const Outcome w = outcome_of(inst, {"1", "2", "6", "7"});
    const AuditReport ind = if_min_beta(inst, w);
    c.check(ind.value == 2.0, "fig2a k=4: if = " + fmt(*ind.value) + ", expected 2");
    c.check(ind.witness && ind.witness->agents == std::vector<std::size_t>{agent_of(inst, "8")},
            "fig2a k=4: if witness is not agent 8");
    const AuditReport tc = tc_min_alpha(inst, w, Rational(1));
    c.check(*tc.value >= 2.0 - kTau, "fig2a k=4: tc = " + fmt(*tc.value) + ", expected >= 2");
    Witness group;
    group.agents = agents_of(inst, {"8", "9", "10"});
    group.candidates = {point_of(inst, "9")};
    double to_w = 0, to_c = 0;
    for (std::size_t i : group.agents) {
      to_w += dist_to_set(inst.metric(), inst.agents[i], w.centers);
      to_c += inst.metric().dist(inst.agents[i], group.candidates[0]);
    }
    c.check(to_w == 4 && to_c == 2, "fig2a k=4: group {8,9,10} to c=9 sums " + fmt(to_w) + " vs " + fmt(to_c));
    c.check(evaluate_tc_witness(inst, w, group) == 2.0, "fig2a k=4: tc witness ratio is not 2");
  }
  {
    const Fixture fx = make_fixture("fig2b");
    const Instance inst = fx.instance.with_k(5);
    const Outcome w = outcome_of(inst, {"1", "2", "3", "6", "9"});
    const AuditReport dprf = dprf_check(inst, w);
    c.check(dprf.passed == false && confirms_violation(inst, w, dprf), "fig2b: DPRF violation not found");
    c.check(uprf_check(inst, w).passed == true, "fig2b: UPRF does not pass");
  }
  {
    const Fixture fx = make_fixture("fig3a");
    const Instance inst = fx.instance.with_k(4);
    const Outcome w = outcome_of(inst, {"1", "2", "3", "6"});
    c.check(rank_jr_check(inst, w).passed == true, "fig3a: rank-JR does not pass");
    const AuditReport pjr = rank_pjr_check(inst, w);
    c.check(pjr.passed == false && confirms_violation(inst, w, pjr), "fig3a: rank-PJR violation not found");
  }
  {
    const Fixture fx = make_fixture("fig3b");
    const Instance inst = fx.instance.with_k(4);
    const Outcome w = outcome_of(inst, {"1", "2", "3", "9"});
    c.check(rank_pjr_check(inst, w).passed == true, "fig3b: rank-PJR does not pass");
    const AuditReport plus = rank_pjr_plus_check(inst, w);
    c.check(plus.passed == false && confirms_violation(inst, w, plus), "fig3b: rank-PJR+ violation not found");
    AuditReport stated = plus;
    stated.witness = Witness{agents_of(inst, {"5", "6", "7", "8", "9", "10"}), {point_of(inst, "6")}, {}, 3.0, 2};
    c.check(confirms_violation(inst, w, stated), "fig3b: no rank-PJR+ violation at y=3 with candidate 6");
  }
  {
    const Fixture fx = make_fixture("path_uprf");
    const Outcome& w = fx.cases.front().outcome;
    c.check(uprf_check(fx.instance, w).passed == true, "path_uprf: UPRF does not pass");
    const AuditReport jr = rank_jr_check(fx.instance, w);
    c.check(jr.passed == false && confirms_violation(fx.instance, w, jr), "path_uprf: rank-JR violation not found");
  }
  return c.finish(1, 1.0);
}

std::vector<testing_support::CorpusItem> main_corpus() { return testing_support::corpus(500, 20240, {12, 12, 5}); }

bool axiom_properties(const std::vector<testing_support::CorpusItem>& items) {
  Criterion c("rule outputs satisfy their axioms on 500 random instances");
  for (const auto& item : items) {
    const Outcome gc = greedy_capture(item.inst).outcome;
    c.check(rank_jr_check(item.inst, gc).passed == true, tag(item, "greedy capture fails rank-JR"));
    const Outcome ea = expanding_approvals(item.inst).outcome;
    c.check(rank_pjr_plus_check(item.inst, ea).passed == true, tag(item, "expanding approvals fails rank-PJR+"));
    c.check(rank_pjr_check(item.inst, ea).passed == true, tag(item, "expanding approvals fails rank-PJR"));
  }
  return c.finish(2, 60.0);
}

std::vector<Outcome> outcomes_for(const testing_support::CorpusItem& item) {
  std::mt19937_64 rng(item.seed ^ 0x5eedULL);
  return {greedy_capture(item.inst).outcome, expanding_approvals(item.inst).outcome, random_outcome(item.inst, rng),
          random_outcome(item.inst, rng)};
}

const Rational kGammas[] = {Rational(3, 2), Rational(2), Rational(4)};

std::vector<std::size_t> qs_for(const Instance& inst) {
  std::vector<std::size_t> out;
  for (std::size_t q = 1; q <= std::min<std::size_t>(3, inst.k); ++q) out.push_back(q);
  return out;
}

// Every agent is a candidate of its own; co-located agents sharing one point do not count.
bool own_candidates(const Instance& inst) {
  std::vector<PointId> a = inst.agents;
  std::sort(a.begin(), a.end());
  return agents_subset_of_candidates(inst) && std::adjacent_find(a.begin(), a.end()) == a.end();
}

// q-th closest distances to W exist only for q <= |W|.
std::vector<std::size_t> qs_for(const Instance& inst, const Outcome& w) {
  std::vector<std::size_t> out;
  for (std::size_t q : qs_for(inst)) {
    if (q <= w.size()) out.push_back(q);
  }
  return out;
}

bool q_if_defined(const Instance& inst, const Outcome& w, std::size_t q) {
  return own_candidates(inst) && inst.k <= inst.n() && q <= w.size();
}

std::vector<PointId> distinct(std::vector<PointId> a, const std::vector<PointId>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

void check_bound(Criterion& c, const testing_support::CorpusItem& item, const std::string& what, double value,
                 double bound) {
  c.check(value <= bound + kTau, tag(item, what + " = " + fmt(value) + " exceeds " + fmt(bound)));
}

bool theorem_bounds(const std::vector<testing_support::CorpusItem>& items) {
  Criterion c("approximation bounds implied by the axioms and rules");
  const double sqrt2 = std::sqrt(2.0);
  for (const auto& item : items) {
    const Instance& inst = item.inst;
    const bool subset = own_candidates(inst);
    for (const Outcome& w : outcomes_for(item)) {
      const double pf = *pf_min_alpha(inst, w).value;
      const double ind = subset ? *if_min_beta(inst, w).value : 0.0;
      if (rank_jr_check(inst, w).passed == true) {
        check_bound(c, item, "JR: pf", pf, 1 + sqrt2);
        if (subset) check_bound(c, item, "JR: if", ind, 2);
        for (const Rational& g : kGammas) {
          const double gd = to_double(g);
          check_bound(c, item, "JR: tc(" + to_string(g) + ")", *tc_min_alpha(inst, w, g).value, 2 * gd / (gd - 1));
        }
      }
      if (rank_pjr_check(inst, w).passed == true) {
        for (std::size_t q : qs_for(inst, w)) {
          const std::string qs = std::to_string(q);
          check_bound(c, item, "PJR: " + qs + "-core", *q_core_min_alpha(inst, w, q).value, 3 + 2 * sqrt2);
          if (q_if_defined(inst, w, q)) check_bound(c, item, "PJR: " + qs + "-if", *q_if_min_beta(inst, w, q).value, 3);
          for (const Rational& g : kGammas) {
            const double gd = to_double(g);
            check_bound(c, item, "PJR: " + qs + "-tc(" + to_string(g) + ")",
                        *q_tc_min_alpha(inst, w, q, g, 2 * q - 1).value, (3 * gd + 1) / (gd - 1));
          }
        }
      }
      if (uprf_check(inst, w).passed == true) {
        check_bound(c, item, "UPRF: pf", pf, (3 + std::sqrt(17.0)) / 2);
        if (subset) check_bound(c, item, "UPRF: if", ind, 3);
        for (const Rational& g : kGammas) {
          const double gd = to_double(g);
          check_bound(c, item, "UPRF: tc(" + to_string(g) + ")", *tc_min_alpha(inst, w, g).value, 3 * gd / (gd - 1));
        }
        if (subset) {
          for (std::size_t q : qs_for(inst, w)) {
            const std::string qs = std::to_string(q);
            check_bound(c, item, "UPRF: " + qs + "-core", *q_core_min_alpha(inst, w, q).value, (5 + std::sqrt(33.0)) / 2);
            if (q_if_defined(inst, w, q)) {
              check_bound(c, item, "UPRF: " + qs + "-if", *q_if_min_beta(inst, w, q).value, 3);
            }
            for (const Rational& g : kGammas) {
              const double gd = to_double(g);
              check_bound(c, item, "UPRF: " + qs + "-tc(" + to_string(g) + ")",
                          *q_tc_min_alpha(inst, w, q, g, 2 * q - 1).value, (5 * gd + 1) / (gd - 1));
            }
          }
        }
      }
    }

    if (subset) {
      const Outcome rgc = restricted_solve(inst, Rule::GreedyCapture).outcome;
      check_bound(c, item, "restricted gc: pf", *pf_min_alpha(inst, rgc).value, 3);
      std::mt19937_64 rng(item.seed);
      const Outcome within = random_outcome(inst.with_candidates(distinct(inst.agents, {})), rng);
      for (const Outcome& w : {restricted_solve(inst, Rule::ExpandingApprovals).outcome, rgc, within}) {
        const Instance narrowed = inst.with_candidates(distinct(inst.agents, w.centers));
        if (rank_jr_check(narrowed, w).passed == true) {
          check_bound(c, item, "restricted JR: pf", *pf_min_alpha(inst, w).value, 3);
        }
        if (rank_pjr_check(narrowed, w).passed == true) {
          for (std::size_t q : qs_for(inst, w)) {
            check_bound(c, item, "restricted PJR: " + std::to_string(q) + "-core", *q_core_min_alpha(inst, w, q).value, 5);
          }
        }
      }
    }
  }

  std::size_t used = 0;
  for (const auto& item : items) {
    if (used == 50) break;
    if (!agents_equal_candidates(item.inst)) continue;
    ++used;
    for (std::size_t q : qs_for(item.inst)) {
      const std::string qs = std::to_string(q);
      for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Outcome w = fair_greedy_capture(item.inst, q, seed).outcome;
        check_bound(c, item, "fgc: " + qs + "-core", *q_core_min_alpha(item.inst, w, q).value, 5);
        if (q_if_defined(item.inst, w, q)) check_bound(c, item, "fgc: " + qs + "-if", *q_if_min_beta(item.inst, w, q).value, 3);
        for (const Rational& g : kGammas) {
          const double gd = to_double(g);
          check_bound(c, item, "fgc: " + qs + "-tc(" + to_string(g) + ")",
                      *q_tc_min_alpha(item.inst, w, q, g, 2 * q - 1).value, 5 * gd / (gd - 1));
        }
      }
    }
  }
  c.check(used == 50, "only " + std::to_string(used) + " instances with N = C in the corpus");
  return c.finish(3, 600.0);
}

bool cross_notion(const std::vector<testing_support::CorpusItem>& items) {
  Criterion c("translations between the fairness notions");
  for (const auto& item : items) {
    const Instance& inst = item.inst;
    const bool subset = own_candidates(inst);
    for (const Outcome& w : outcomes_for(item)) {
      const double pf = *pf_min_alpha(inst, w).value;
      for (const Rational& g : kGammas) {
        const double gd = to_double(g);
        check_bound(c, item, "tc(" + to_string(g) + ")", *tc_min_alpha(inst, w, g).value, gd * (pf + 1) / (gd - 1));
      }
      if (!subset) continue;
      const double ind = *if_min_beta(inst, w).value;
      check_bound(c, item, "if", ind, 1 + pf);
      check_bound(c, item, "pf", pf, 2 * ind);
      if (agents_equal_candidates(inst)) check_bound(c, item, "pf (N = C)", pf, 1 + ind);
      for (std::size_t q : qs_for(inst, w)) {
        if (!q_if_defined(inst, w, q)) continue;
        const std::string qs = std::to_string(q);
        const double core = *q_core_min_alpha(inst, w, q).value;
        const double qif = *q_if_min_beta(inst, w, q).value;
        check_bound(c, item, qs + "-if", qif, 1 + 2 * core);
        check_bound(c, item, qs + "-core", core, 2 * qif);
      }
    }
  }
  return c.finish(4, 600.0);
}

bool tightness() {
  Criterion c("lower-bound fixtures");
  struct Pair {
    const char* id;
    double pf;
    double ind;
  };
  for (const Pair& p : {Pair{"fig4a(2)", 2, 3}, Pair{"fig4b(2)", 3, 2}, Pair{"fig4c(2)", 4, 2}}) {
    const Fixture fx = make_fixture(p.id);
    const Outcome& w = fx.cases.front().outcome;
    const double pf = *pf_min_alpha(fx.instance, w).value;
    const double ind = *if_min_beta(fx.instance, w).value;
    c.check(pf == p.pf, std::string(p.id) + ": pf = " + fmt(pf) + ", expected " + fmt(p.pf));
    c.check(ind == p.ind, std::string(p.id) + ": if = " + fmt(ind) + ", expected " + fmt(p.ind));
  }
  {
    const Fixture fx = make_fixture("lb_tc(1,2,400,4)");
    const double tc = *tc_min_alpha(fx.instance, fx.cases.front().outcome, Rational(2)).value;
    c.check(std::abs(tc - 3.0) <= 0.05 * 3.0, "lb_tc: tc(2) = " + fmt(tc) + ", not within 5% of 3");
  }
  {
    const Fixture fx = make_fixture("qtc_blocks(2,12,4)");
    const Outcome& w = fx.cases.front().outcome;
    const AuditReport qtc = q_tc_min_alpha(fx.instance, w, 2, Rational(1), 4);
    c.check(std::isinf(*qtc.value), "qtc_blocks: 2-tc with cap 4 = " + fmt(*qtc.value) + ", expected inf");
    c.check(rank_pjr_check(fx.instance, w).passed == true, "qtc_blocks: rank-PJR does not pass");
    c.check(uprf_check(fx.instance, w).passed == true, "qtc_blocks: UPRF does not pass");
    c.check(q_if_min_beta(fx.instance, w, 2).value == 1.0, "qtc_blocks: 2-if is not 1");
  }
  return c.finish(5, 60.0);
}

bool oracle_equivalence() {
  Criterion c("fast auditors agree with brute force on 500 small instances");
  constexpr oracle::Axiom kAxioms[] = {oracle::Axiom::JR, oracle::Axiom::PJR, oracle::Axiom::PJRPlus,
                                       oracle::Axiom::DPRF, oracle::Axiom::UPRF};
  constexpr Notion kNotions[] = {Notion::RankJR, Notion::RankPJR, Notion::RankPJRPlus, Notion::DPRF, Notion::UPRF};
  for (const auto& item : testing_support::corpus(500, 77000, {8, 8, 5})) {
    const Instance& inst = item.inst;
    const std::size_t all = inst.candidates.size();
    for (const Outcome& w : outcomes_for(item)) {
      auto agree = [&](const std::string& what, double fast, double slow) {
        c.check(same(fast, slow), tag(item, what + ": fast " + fmt(fast) + " vs oracle " + fmt(slow)));
      };
      agree("pf", *pf_min_alpha(inst, w).value, oracle::pf(inst, w));
      if (agents_subset_of_candidates(inst)) agree("if", *if_min_beta(inst, w).value, oracle::individual(inst, w));
      for (const Rational& g : {Rational(1), Rational(3, 2), Rational(2)}) {
        agree("tc(" + to_string(g) + ")", *tc_min_alpha(inst, w, g).value, oracle::tc(inst, w, g));
      }
      for (std::size_t q = 1; q <= std::min(inst.k, all); ++q) {
        const std::string qs = std::to_string(q);
        agree(qs + "-core", *q_core_min_alpha(inst, w, q, all).value, oracle::qcore(inst, w, q));
        if (q_if_defined(inst, w, q)) agree(qs + "-if", *q_if_min_beta(inst, w, q).value, oracle::qif(inst, w, q));
        for (const Rational& g : {Rational(1), Rational(2)}) {
          agree(qs + "-tc(" + to_string(g) + ")", *q_tc_min_alpha(inst, w, q, g, all).value,
                oracle::qtc(inst, w, q, g));
          const std::size_t narrow = std::min(2 * q - 1, all);
          agree(qs + "-tc(" + to_string(g) + ", cap)", *q_tc_min_alpha(inst, w, q, g, narrow).value,
                oracle::qtc(inst, w, q, g, narrow));
        }
      }
      for (std::size_t a = 0; a < 5; ++a) {
        const AuditReport r = run_audit(inst, w, kNotions[a]);
        const bool expected = oracle::rank(kAxioms[a], inst, w);
        c.check(r.passed == expected, tag(item, std::string(to_string(kNotions[a])) + " verdict differs from oracle"));
        if (r.passed == false) c.check(confirms_violation(inst, w, r), tag(item, "unconfirmed witness"));
      }
    }
  }
  return c.finish(6, 600.0);
}

std::string snapshot(const Instance& inst, unsigned threads) {
  std::string out;
  const Solution solutions[] = {greedy_capture(inst), expanding_approvals(inst),
                                fair_greedy_capture(inst, std::min<std::size_t>(2, inst.k), 17),
                                fair_greedy_capture(inst, 1, 99)};
  for (const Solution& s : solutions) {
    out += dump(outcome_to_json(s.outcome));
    out += dump(trace_to_json(s.trace));
    for (Notion n : {Notion::ProportionalFairness, Notion::IndividualFairness, Notion::TransferableCore, Notion::QCore,
                     Notion::QTransferableCore, Notion::RankJR, Notion::RankPJR, Notion::RankPJRPlus, Notion::DPRF,
                     Notion::UPRF}) {
      AuditParams params;
      if (n == Notion::QCore || n == Notion::QTransferableCore) params.q = std::min<std::size_t>(2, inst.k);
      out += dump(report_to_json(run_audit(inst, s.outcome, n, params, {}, threads)));
    }
  }
  return out;
}

bool determinism(const std::vector<testing_support::CorpusItem>& items) {
  Criterion c("byte-identical results for identical seeds");
  std::size_t used = 0;
  for (const auto& item : items) {
    if (!agents_equal_candidates(item.inst)) continue;
    if (++used > 40) break;
    const std::string first = snapshot(item.inst, 1);
    c.check(first == snapshot(item.inst, 1), tag(item, "second run differs"));
    c.check(first == snapshot(item.inst, 4), tag(item, "four-thread run differs"));
  }
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    for (Family f : {Family::Euclidean, Family::Graph, Family::Blocks}) {
      c.check(dump(instance_to_json(generate(f, 10, 3, seed))) == dump(instance_to_json(generate(f, 10, 3, seed))),
              std::string("generator ") + to_string(f) + " differs for seed " + std::to_string(seed));
    }
  }
  return c.finish(7, 600.0);
}

}  // namespace

int main() {
  const auto items = main_corpus();
  const std::vector<std::function<bool()>> criteria{
      paper_examples,
      [&] { return axiom_properties(items); },
      [&] { return theorem_bounds(items); },
      [&] { return cross_notion(items); },
      tightness,
      oracle_equivalence,
      [&] { return determinism(items); },
  };
  int failed = 0;
  for (const auto& run : criteria) {
    if (!run()) ++failed;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
