#include <doctest.h>

#include <map>
#include <set>

#include "corpus.hpp"
#include "propclust/algorithms.hpp"
#include "propclust/audit_rank.hpp"
#include "propclust/error.hpp"
#include "propclust/fixtures.hpp"

using namespace propclust;

namespace {

void check_trace_shape(const Instance& inst, const Solution& sol) {
  double last = 0;
  std::set<std::size_t> removed;
  std::set<PointId> opened;
  for (const TraceEvent& e : sol.trace.events) {
    CHECK(e.delta >= last);
    last = e.delta;
    if (e.kind == EventKind::Open) CHECK(opened.insert(*e.center).second);
    if (e.kind == EventKind::Absorb || e.kind == EventKind::Open) {
      for (std::size_t a : e.agents) CHECK(removed.insert(a).second);
    }
  }
  CHECK(sol.outcome.size() <= inst.k);
  CHECK(validate(inst, sol.outcome).empty());
}

}  // namespace

TEST_CASE("greedy capture on the social-choice figure") {
  const Instance inst = make_fixture("fig3a").instance;
  const Solution sol = greedy_capture(inst);
  CHECK(sol.outcome == Outcome::of({point_of(inst, "1"), point_of(inst, "6")}, "gc"));
  const std::vector<TraceEvent> expected{
      {0, EventKind::Open, 0, {0, 1, 2, 3}, Rational(0), 6},
      {1, EventKind::Open, 5, {4, 5, 6, 8}, Rational(0), 2},
      {2, EventKind::Absorb, 5, {7}, Rational(0), 1},
      {2, EventKind::Absorb, 5, {9}, Rational(0), 0},
  };
  CHECK(sol.trace.events == expected);
  check_trace_shape(inst, sol);
}

TEST_CASE("greedy capture with one co-located population") {
  auto space = std::make_shared<const MetricSpace>(DistanceMatrixSpec{{{0, 0, 3}, {0, 0, 3}, {3, 3, 0}}});
  const Instance inst = Instance::make(space, {0, 1}, std::nullopt, 1);
  const Solution sol = greedy_capture(inst);
  CHECK(sol.outcome.centers == std::vector<PointId>{0});
  REQUIRE(sol.trace.events.size() == 1);
  CHECK(sol.trace.events[0].delta == 0);
}

TEST_CASE("greedy capture satisfies rank-JR on the first figure") {
  const Instance inst = make_fixture("fig2a").instance;
  const Solution sol = greedy_capture(inst);
  CHECK(rank_jr_check(inst, sol.outcome).passed == true);
}

TEST_CASE("expanding approvals on the social-choice figure") {
  const Instance inst = make_fixture("fig3a").instance;
  const Solution sol = expanding_approvals(inst);
  CHECK(sol.outcome.centers == outcome_of(inst, {"1", "5", "6", "9"}).centers);
  CHECK(sol.outcome.origin == "ea");
  check_trace_shape(inst, sol);

  // every opening is paid by deductions summing to exactly one unit
  Rational paid(0);
  std::size_t opens = 0;
  for (const TraceEvent& e : sol.trace.events) {
    if (e.kind == EventKind::Open) {
      if (opens > 0) CHECK(paid == Rational(1));
      paid = 0;
      ++opens;
    } else if (e.kind == EventKind::Deduct) {
      paid += e.amount;
    }
  }
  CHECK(paid == Rational(1));
  CHECK(opens == 4);
  CHECK(rank_pjr_plus_check(inst, sol.outcome).passed == true);
}

TEST_CASE("deduction policies") {
  const std::vector<Supporter> s{{0, 2.0, 3}, {1, 1.0, 2}, {2, 1.0, 4}};
  const auto closest = closest_first()(s, 5);
  CHECK(closest == std::vector<std::pair<std::size_t, std::int64_t>>{{1, 2}, {2, 3}});
  const auto richest = richest_first()(s, 5);
  CHECK(richest == std::vector<std::pair<std::size_t, std::int64_t>>{{2, 4}, {0, 1}});

  const Instance inst = make_fixture("fig3a").instance;
  const Solution sol = expanding_approvals(inst, richest_first());
  CHECK(sol.outcome.size() == 4);
  CHECK(rank_pjr_plus_check(inst, sol.outcome).passed == true);

  DeductionPolicy cheat = [](std::span<const Supporter>, std::int64_t) {
    return std::vector<std::pair<std::size_t, std::int64_t>>{};
  };
  CHECK_THROWS_AS(expanding_approvals(inst, cheat), Error);
}

TEST_CASE("fair greedy capture on the social-choice figure") {
  const Instance inst = make_fixture("fig3a").instance;
  const Outcome target = outcome_of(inst, {"1", "5", "9", "10"});
  bool seen = false;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const Solution sol = fair_greedy_capture(inst, 2, seed);
    CHECK(sol.outcome.size() == 4);
    if (sol.outcome.centers == target.centers) seen = true;
  }
  CHECK(seen);

  const Solution first = fair_greedy_capture(inst, 2, 7);
  REQUIRE(!first.trace.events.empty());
  CHECK(first.trace.events[0].kind == EventKind::Capture);
  CHECK(first.trace.events[0].delta == 2);
  CHECK(first.trace.events[0].agents.size() == 5);
  CHECK(first.outcome.origin == "fgc(q=2,seed=7)");
}

TEST_CASE("fair greedy capture on one co-located population") {
  std::vector<std::vector<double>> d(6, std::vector<double>(6, 0.0));
  auto space = std::make_shared<const MetricSpace>(DistanceMatrixSpec{d});
  const Instance inst = Instance::make(space, {0, 1, 2, 3, 4, 5}, std::nullopt, 3);
  std::set<std::vector<PointId>> outcomes;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Solution sol = fair_greedy_capture(inst, 3, seed);
    REQUIRE(sol.trace.events.size() == 4);
    CHECK(sol.trace.events[0].kind == EventKind::Capture);
    CHECK(sol.trace.events[0].agents.size() == 6);
    CHECK(sol.outcome.size() == 3);
    outcomes.insert(sol.outcome.centers);
  }
  CHECK(outcomes.size() == 20);
}

TEST_CASE("fair greedy capture preconditions and determinism") {
  const Instance inst = make_fixture("fig3a").instance;
  CHECK_THROWS_AS(fair_greedy_capture(inst, 5, 1), Error);
  CHECK_THROWS_AS(fair_greedy_capture(inst, 0, 1), Error);
  CHECK_THROWS_AS(fair_greedy_capture(make_fixture("fig4c(2)").instance, 1, 1), Error);
  const Solution a = fair_greedy_capture(inst, 2, 99);
  const Solution b = fair_greedy_capture(inst, 2, 99);
  CHECK(a.outcome == b.outcome);
  CHECK(a.trace == b.trace);
}

TEST_CASE("restricted mode") {
  const Instance inst = make_fixture("fig3a").instance;
  const Solution plain = greedy_capture(inst);
  const Solution restricted = restricted_solve(inst, Rule::GreedyCapture);
  CHECK(restricted.outcome.centers == plain.outcome.centers);
  CHECK(restricted.outcome.origin == "gc-restricted");
  CHECK(restricted.trace == plain.trace);
  CHECK(restricted_solve(inst, Rule::ExpandingApprovals).outcome.centers == expanding_approvals(inst).outcome.centers);

  auto space = std::make_shared<const MetricSpace>(DistanceMatrixSpec{{{0, 1}, {1, 0}}});
  const Instance outside = Instance::make(space, {0}, std::vector<PointId>{1}, 1);
  CHECK_THROWS_AS(restricted_solve(outside, Rule::GreedyCapture), Error);
}

TEST_CASE("trace shape on random instances") {
  for (const auto& item : testing_support::corpus(90, 900, {})) {
    check_trace_shape(item.inst, greedy_capture(item.inst));
    check_trace_shape(item.inst, expanding_approvals(item.inst));
  }
}

TEST_CASE("event kind tags") {
  for (EventKind k : {EventKind::Open, EventKind::Absorb, EventKind::Deduct, EventKind::Capture, EventKind::Fill}) {
    CHECK(parse_event_kind(to_string(k)) == k);
  }
  CHECK_THROWS_AS(parse_event_kind("nope"), Error);
}
