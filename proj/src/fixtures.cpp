#include "propclust/fixtures.hpp"

#include <algorithm>
#include <cmath>

#include "propclust/error.hpp"

namespace propclust {

namespace {

struct FixtureArgs {
  std::string name;
  std::vector<Rational> values;
};

/// "fig4a(2)", "fig4a(alpha=2)", "lb_tc(1,2,400,4)" or a bare name.
FixtureArgs parse_id(const std::string& id) {
  FixtureArgs out;
  const auto open = id.find('(');
  out.name = id.substr(0, open);
  if (open == std::string::npos) return out;
  if (id.back() != ')') throw Error("invalid input", "malformed fixture id '" + id + "'");
  std::string body = id.substr(open + 1, id.size() - open - 2);
  std::size_t start = 0;
  while (start <= body.size() && !body.empty()) {
    const auto comma = body.find(',', start);
    std::string arg = body.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (auto eq = arg.find('='); eq != std::string::npos) arg = arg.substr(eq + 1);
    out.values.push_back(parse_rational(arg));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Rational arg_or(const FixtureArgs& args, std::size_t i, Rational fallback) {
  return i < args.values.size() ? args.values[i] : fallback;
}

std::size_t count_arg(const FixtureArgs& args, std::size_t i, std::size_t fallback) {
  const Rational v = arg_or(args, i, Rational(static_cast<std::int64_t>(fallback)));
  if (v.denominator() != 1 || v < 1) throw Error("invalid input", "fixture size arguments must be positive integers");
  return static_cast<std::size_t>(v.numerator());
}

std::vector<std::string> numbered(std::size_t count) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(std::to_string(i));
  return out;
}

Instance graph_instance(std::size_t nodes, std::vector<GraphEdge> edges, std::vector<PointId> agents,
                        std::optional<std::vector<PointId>> candidates, std::size_t k,
                        std::vector<std::string> labels) {
  auto space = std::make_shared<const MetricSpace>(WeightedGraphSpec{nodes, std::move(edges)});
  Instance inst = Instance::make(std::move(space), std::move(agents), std::move(candidates), k);
  inst.labels = std::move(labels);
  return inst;
}

std::vector<PointId> iota_ids(std::size_t from, std::size_t count) {
  std::vector<PointId> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = from + i;
  return out;
}

/// Labels 1..4 share one location: separate points joined by zero-length edges to point 0.
std::vector<GraphEdge> colocated_block() {
  return {{0, 1, Rational(0)}, {0, 2, Rational(0)}, {0, 3, Rational(0)}};
}

/// Edge between figure labels (1-based), with label 1..4 standing for the shared location.
GraphEdge edge(std::size_t a, std::size_t b, Rational w = Rational(1)) { return {a - 1, b - 1, w}; }

Instance ten_point_graph(std::vector<GraphEdge> edges, std::size_t k) {
  auto all = colocated_block();
  all.insert(all.end(), edges.begin(), edges.end());
  return graph_instance(10, std::move(all), iota_ids(0, 10), std::nullopt, k, numbered(10));
}

Expectation value(Notion notion, Expect kind, double target, std::string text, AuditParams params = {}) {
  Expectation e;
  e.notion = notion;
  e.params = std::move(params);
  e.kind = kind;
  e.target = target;
  e.target_text = std::move(text);
  return e;
}

Expectation verdict(Notion notion, bool pass, AuditParams params = {}) {
  Expectation e;
  e.notion = notion;
  e.params = std::move(params);
  e.kind = pass ? Expect::Pass : Expect::Fail;
  return e;
}

AuditParams with_q(std::size_t q) {
  AuditParams p;
  p.q = q;
  return p;
}

AuditParams with_gamma(Rational gamma) {
  AuditParams p;
  p.gamma = gamma;
  return p;
}

std::string text_of(const Rational& r) { return to_string(r); }

FixtureCase make_case(const Instance& inst, std::size_t k, const std::vector<std::string>& w) {
  FixtureCase c;
  c.k = k;
  c.outcome = outcome_of(inst, w);
  c.name = "k=" + std::to_string(k) + " W={";
  for (std::size_t i = 0; i < w.size(); ++i) c.name += (i ? "," : "") + w[i];
  c.name += "}";
  return c;
}

Fixture fig2a() {
  Fixture f;
  f.id = "fig2a";
  f.instance = ten_point_graph({edge(1, 5, Rational(10)), edge(5, 6), edge(6, 7), edge(5, 8), edge(6, 9),
                                edge(7, 10), edge(8, 9), edge(9, 10)},
                               5);
  f.notes = "agents 1-4 share one location; N = C";
  FixtureCase a = make_case(f.instance, 5, {"1", "2", "3", "6", "9"});
  a.expectations = {value(Notion::ProportionalFairness, Expect::Equal, 1, "1"),
                    value(Notion::QCore, Expect::Equal, 1, "1", with_q(1)),
                    value(Notion::QCore, Expect::AtLeast, 10.0 / 3.0, "10/3", with_q(3))};
  FixtureCase b = make_case(f.instance, 4, {"1", "2", "6", "7"});
  b.expectations = {value(Notion::ProportionalFairness, Expect::Equal, 1, "1"),
                    value(Notion::IndividualFairness, Expect::Equal, 2, "2"),
                    value(Notion::TransferableCore, Expect::AtLeast, 2, "2", with_gamma(Rational(1)))};
  f.cases = {std::move(a), std::move(b)};
  return f;
}

Fixture fig2b() {
  Fixture f;
  f.id = "fig2b";
  f.instance = ten_point_graph({edge(1, 5, Rational(5)), edge(5, 6, Rational(3)), edge(6, 7), edge(6, 9),
                                edge(8, 9), edge(9, 10)},
                               5);
  f.notes = "agents 1-4 share one location; N = C";
  FixtureCase a = make_case(f.instance, 5, {"1", "2", "3", "6", "9"});
  a.expectations = {verdict(Notion::DPRF, false), verdict(Notion::RankPJR, false),
                    verdict(Notion::UPRF, true)};
  f.cases = {std::move(a)};
  return f;
}

Fixture fig3a() {
  Fixture f;
  f.id = "fig3a";
  f.instance = ten_point_graph({edge(1, 5, Rational(10)), edge(5, 6), edge(6, 7), edge(6, 9), edge(8, 9),
                                edge(9, 10)},
                               4);
  f.notes = "agents 1-4 share one location; N = C";
  FixtureCase a = make_case(f.instance, 4, {"1", "2", "3", "6"});
  a.expectations = {value(Notion::ProportionalFairness, Expect::Above, 1, "1"),
                    verdict(Notion::RankJR, true), verdict(Notion::RankPJR, false)};
  f.cases = {std::move(a)};
  return f;
}

Fixture fig3b() {
  Fixture f;
  f.id = "fig3b";
  f.instance = ten_point_graph({edge(1, 5, Rational(4)), edge(5, 6, Rational(2)), edge(6, 7, Rational(3)),
                                edge(6, 9, Rational(2)), edge(8, 9), edge(9, 10), edge(6, 1, Rational(4))},
                               4);
  f.notes = "agents 1-4 share one location; N = C";
  FixtureCase a = make_case(f.instance, 4, {"1", "2", "3", "9"});
  a.expectations = {verdict(Notion::RankPJR, true), verdict(Notion::DPRF, true),
                    verdict(Notion::RankPJRPlus, false)};
  f.cases = {std::move(a)};
  return f;
}

Fixture fig4a(const FixtureArgs& args) {
  const Rational alpha = arg_or(args, 0, Rational(2));
  if (alpha < 1) throw Error("invalid input", "fig4a needs alpha >= 1");
  Fixture f;
  f.id = "fig4a(" + text_of(alpha) + ")";
  f.instance = graph_instance(6, {{0, 1, Rational(0)}, {0, 2, Rational(0)}, {0, 3, alpha}, {3, 4, Rational(1)}, {4, 5, Rational(1)}},
                              iota_ids(0, 6), std::nullopt, 2, numbered(6));
  f.notes = "agents 1-3 share one location; N = C";
  FixtureCase a = make_case(f.instance, 2, {"2", "3"});
  const double x = to_double(alpha);
  a.expectations = {value(Notion::ProportionalFairness, Expect::Equal, x, text_of(alpha)),
                    value(Notion::IndividualFairness, Expect::Equal, x + 1, text_of(alpha + 1))};
  f.cases = {std::move(a)};
  return f;
}

Fixture fig4b(const FixtureArgs& args) {
  const Rational beta = arg_or(args, 0, Rational(2));
  if (beta < 1) throw Error("invalid input", "fig4b needs beta >= 1");
  Fixture f;
  f.id = "fig4b(" + text_of(beta) + ")";
  // 0 = w1, 1 = w2, 2 = c, 3..5 = agents 1..3
  f.instance = graph_instance(6, {{2, 3, Rational(1)}, {2, 4, Rational(1)}, {2, 5, Rational(1)}, {2, 0, beta}, {2, 1, beta}},
                              iota_ids(0, 6), std::nullopt, 2, {"w1", "w2", "c", "1", "2", "3"});
  f.notes = "N = C";
  FixtureCase a = make_case(f.instance, 2, {"w1", "w2"});
  const double x = to_double(beta);
  a.expectations = {value(Notion::IndividualFairness, Expect::Equal, x, text_of(beta)),
                    value(Notion::ProportionalFairness, Expect::Equal, x + 1, text_of(beta + 1))};
  f.cases = {std::move(a)};
  return f;
}

Fixture fig4c(const FixtureArgs& args) {
  const Rational beta = arg_or(args, 0, Rational(2));
  if (beta < 1) throw Error("invalid input", "fig4c needs beta >= 1");
  Fixture f;
  f.id = "fig4c(" + text_of(beta) + ")";
  // 0..3 = agents 1..4, 4 = c, 5 = w
  std::vector<GraphEdge> edges;
  for (std::size_t i = 0; i < 4; ++i) {
    edges.push_back({4, i, Rational(1)});
    edges.push_back({i, 5, 2 * beta});
  }
  f.instance = graph_instance(6, std::move(edges), iota_ids(0, 4), std::nullopt, 1, {"1", "2", "3", "4", "c", "w"});
  f.notes = "N = {1,2,3,4}, C = N + {c, w}";
  FixtureCase a = make_case(f.instance, 1, {"w"});
  const double x = to_double(beta);
  a.expectations = {value(Notion::IndividualFairness, Expect::Equal, x, text_of(beta)),
                    value(Notion::ProportionalFairness, Expect::Equal, 2 * x, text_of(2 * beta))};
  f.cases = {std::move(a)};
  return f;
}

Fixture path_uprf() {
  Fixture f;
  f.id = "path_uprf";
  f.instance = graph_instance(4, {{0, 1, Rational(1)}, {1, 2, Rational(1)}, {2, 3, Rational(2)}}, iota_ids(0, 3),
                              std::nullopt, 1, {"1", "2", "3", "c"});
  f.notes = "agents on a path 1-2-3 with candidate c two steps past 3";
  FixtureCase a = make_case(f.instance, 1, {"c"});
  a.expectations = {verdict(Notion::UPRF, true), verdict(Notion::RankJR, false),
                    value(Notion::IndividualFairness, Expect::Equal, 3, "3")};
  f.cases = {std::move(a)};
  return f;
}

Fixture lb_tc(const FixtureArgs& args) {
  const Rational alpha = arg_or(args, 0, Rational(1));
  const Rational gamma = arg_or(args, 1, Rational(2));
  const std::size_t n = count_arg(args, 2, 400);
  const std::size_t k = count_arg(args, 3, 4);
  if (alpha < 1 || gamma <= 1) throw Error("invalid input", "lb_tc needs alpha >= 1 and gamma > 1");
  const std::size_t near = (n + k - 1) / k - 1;  // ceil(n/k - 1)
  if (near >= n) throw Error("invalid input", "lb_tc needs n > k");
  const std::size_t far = n - near;
  Fixture f;
  f.id = "lb_tc(" + text_of(alpha) + "," + text_of(gamma) + "," + std::to_string(n) + "," + std::to_string(k) + ")";
  // 0 = c, 1 = c1 (the open center), 2.. = agents at distance 1 from c and alpha from c1
  std::vector<GraphEdge> edges;
  std::vector<std::string> labels{"c", "c1"};
  for (std::size_t i = 0; i < far; ++i) {
    edges.push_back({0, 2 + i, Rational(1)});
    edges.push_back({1, 2 + i, alpha});
    labels.push_back("a" + std::to_string(i + 1));
  }
  std::vector<PointId> agents(near, 0);
  for (std::size_t i = 0; i < far; ++i) agents.push_back(2 + i);
  f.instance = graph_instance(2 + far, std::move(edges), std::move(agents), std::vector<PointId>{0, 1}, k,
                              std::move(labels));
  f.notes = std::to_string(near) + " agents sit on c; the rest are at distance 1 from c";
  FixtureCase a;
  a.k = k;
  a.outcome = Outcome::of({1});
  a.name = "k=" + std::to_string(k) + " W={c1}";
  const double bound = (to_double(gamma) * to_double(alpha) + 1) / (to_double(gamma) - 1);
  Expectation tc = value(Notion::TransferableCore, Expect::WithinRel, bound,
                         text_of((gamma * alpha + 1) / (gamma - 1)), with_gamma(gamma));
  tc.tolerance = 0.05;
  a.expectations = {value(Notion::ProportionalFairness, Expect::AtMost, to_double(alpha), text_of(alpha)), tc};
  f.cases = {std::move(a)};
  return f;
}

Fixture qtc_blocks(const FixtureArgs& args) {
  const std::size_t q = count_arg(args, 0, 2);
  const std::size_t n = count_arg(args, 1, 12);
  const std::size_t k = count_arg(args, 2, 4);
  const std::size_t first = (n + k - 1) / k;
  if (k < 2 || n - first < k - 1 || 2 * q > k || q > first) {
    throw Error("invalid input", "qtc_blocks needs k >= 2, 2q <= k, q <= ceil(n/k) and room for k-1 centers");
  }
  Fixture f;
  f.id = "qtc_blocks(" + std::to_string(q) + "," + std::to_string(n) + "," + std::to_string(k) + ")";
  std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) d[i][j] = ((i < first) != (j < first)) ? 1.0 : 0.0;
  }
  auto space = std::make_shared<const MetricSpace>(DistanceMatrixSpec{std::move(d)});
  f.instance = Instance::make(std::move(space), iota_ids(0, n), std::nullopt, k);
  f.notes = std::to_string(first) + " agents at one location, " + std::to_string(n - first) +
            " at another, distance 1 apart; N = C";
  FixtureCase a;
  a.k = k;
  std::vector<PointId> w{0};
  for (std::size_t i = 0; i + 1 < k; ++i) w.push_back(first + i);
  a.outcome = Outcome::of(w);
  a.name = "k=" + std::to_string(k) + " W=1+" + std::to_string(k - 1);
  AuditParams wide = with_q(q);
  wide.gamma = Rational(1);
  wide.size_cap = 2 * q;
  AuditParams narrow = wide;
  narrow.size_cap = 2 * q - 1;
  a.expectations = {value(Notion::QTransferableCore, Expect::Infinite, 0, "inf", wide),
                    value(Notion::QTransferableCore, Expect::Finite, 0, "finite", narrow),
                    verdict(Notion::RankPJR, true),
                    verdict(Notion::UPRF, true),
                    value(Notion::QIndividualFairness, Expect::Equal, 1, "1", with_q(q)),
                    value(Notion::QCore, Expect::Equal, 1, "1", with_q(q))};
  f.cases = {std::move(a)};
  return f;
}

}  // namespace

Fixture make_fixture(const std::string& id) {
  const FixtureArgs args = parse_id(id);
  auto no_args = [&] {
    if (!args.values.empty()) throw Error("invalid input", "fixture '" + args.name + "' takes no parameters");
  };
  Fixture f;
  if (args.name == "fig2a") {
    no_args();
    f = fig2a();
  } else if (args.name == "fig2b") {
    no_args();
    f = fig2b();
  } else if (args.name == "fig3a") {
    no_args();
    f = fig3a();
  } else if (args.name == "fig3b") {
    no_args();
    f = fig3b();
  } else if (args.name == "fig4a") {
    f = fig4a(args);
  } else if (args.name == "fig4b") {
    f = fig4b(args);
  } else if (args.name == "fig4c") {
    f = fig4c(args);
  } else if (args.name == "path_uprf") {
    no_args();
    f = path_uprf();
  } else if (args.name == "lb_tc") {
    f = lb_tc(args);
  } else if (args.name == "qtc_blocks") {
    f = qtc_blocks(args);
  } else {
    throw Error("invalid input", "unknown fixture '" + id + "'");
  }
  f.instance = f.instance.with_k(f.cases.front().k);
  return f;
}

std::vector<std::string> fixture_ids() {
  return {"fig2a",     "fig2b",     "fig3a",     "fig3b",            "fig4a(2)",
          "fig4b(2)",  "fig4c(2)",  "path_uprf", "lb_tc(1,2,400,4)", "qtc_blocks(2,12,4)"};
}

PointId point_of(const Instance& inst, const std::string& label) {
  for (PointId p = 0; p < inst.metric().size(); ++p) {
    if (inst.label(p) == label) return p;
  }
  throw Error("invalid input", "no point labelled '" + label + "'");
}

Outcome outcome_of(const Instance& inst, const std::vector<std::string>& labels) {
  std::vector<PointId> ids;
  for (const auto& l : labels) ids.push_back(point_of(inst, l));
  return Outcome::of(std::move(ids));
}

}  // namespace propclust
