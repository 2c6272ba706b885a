#include "propclust/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "propclust/error.hpp"

namespace propclust {

namespace {

[[noreturn]] void bad(const std::string& detail) { throw Error("invalid input", detail); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t as_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    bad(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

std::vector<std::size_t> as_indices(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  std::vector<std::size_t> out;
  out.reserve(j.size());
  for (const Json& v : j) out.push_back(as_index(v, what));
  return out;
}

double as_number(const Json& j, const char* what) {
  if (!j.is_number()) bad(std::string(what) + " must be a number");
  return j.get<double>();
}

Rational as_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() && j[1].is_number_integer()) {
    if (j[1].get<std::int64_t>() == 0) bad("rational with zero denominator");
    return Rational(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
  }
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_float()) {
    std::ostringstream os;
    os.precision(17);
    os << j.get<double>();
    return parse_rational(os.str());
  }
  bad("expected a rational: integer, [num, den] or \"num/den\"");
}

Json rational_to_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return Json::array({r.numerator(), r.denominator()});
}

std::vector<std::vector<double>> as_rows(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of rows");
  std::vector<std::vector<double>> rows;
  for (const Json& row : j) {
    if (!row.is_array()) bad(std::string(what) + " rows must be arrays");
    std::vector<double> r;
    for (const Json& v : row) r.push_back(as_number(v, what));
    rows.push_back(std::move(r));
  }
  return rows;
}

MetricDescriptor metric_from_json(const Json& j) {
  const std::string type = field(j, "type").get<std::string>();
  if (type == "graph") {
    WeightedGraphSpec spec;
    spec.nodes = as_index(field(j, "nodes"), "nodes");
    for (const Json& e : field(j, "edges")) {
      if (!e.is_array() || e.size() < 2 || e.size() > 3) bad("edges must be [u, v] or [u, v, w]");
      GraphEdge edge{as_index(e[0], "edge endpoint"), as_index(e[1], "edge endpoint"), Rational(1)};
      if (e.size() == 3) edge.weight = as_rational(e[2]);
      spec.edges.push_back(edge);
    }
    return spec;
  }
  if (type == "points") {
    EuclideanSpec spec;
    spec.dim = as_index(field(j, "dim"), "dim");
    spec.coords = as_rows(field(j, "coords"), "coords");
    for (const auto& row : spec.coords) {
      if (row.size() != spec.dim) bad("coordinate row length differs from dim");
    }
    spec.norm = parse_norm(j.value("norm", std::string("l2")));
    return spec;
  }
  if (type == "matrix") return DistanceMatrixSpec{as_rows(field(j, "d"), "d")};
  bad("unknown metric type '" + type + "'");
}

Json metric_to_json(const MetricDescriptor& descriptor) {
  return std::visit(
      [](const auto& spec) -> Json {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, WeightedGraphSpec>) {
          Json edges = Json::array();
          for (const auto& e : spec.edges) edges.push_back({e.u, e.v, rational_to_json(e.weight)});
          return {{"type", "graph"}, {"nodes", spec.nodes}, {"edges", edges}};
        } else if constexpr (std::is_same_v<T, EuclideanSpec>) {
          return {{"type", "points"}, {"dim", spec.dim}, {"coords", spec.coords}, {"norm", to_string(spec.norm)}};
        } else {
          return {{"type", "matrix"}, {"d", spec.d}};
        }
      },
      descriptor);
}

Json witness_to_json(const Witness& w) {
  Json j{{"agents", w.agents}, {"candidates", w.candidates}};
  if (!w.covered.empty()) j["covered"] = w.covered;
  if (w.threshold) j["threshold"] = value_to_json(*w.threshold);
  if (w.ell) j["ell"] = *w.ell;
  return j;
}

Witness witness_from_json(const Json& j) {
  Witness w;
  w.agents = as_indices(field(j, "agents"), "witness agents");
  w.candidates = as_indices(field(j, "candidates"), "witness candidates");
  if (j.contains("covered")) w.covered = as_indices(j["covered"], "covered winners");
  if (j.contains("threshold")) w.threshold = value_from_json(j["threshold"]);
  if (j.contains("ell")) w.ell = as_index(j["ell"], "ell");
  return w;
}

}  // namespace

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) bad("instance must be a JSON object");
  std::shared_ptr<const MetricSpace> space;
  try {
    space = std::make_shared<const MetricSpace>(metric_from_json(field(j, "metric")));
  } catch (const Json::exception& e) {
    bad(std::string("malformed metric: ") + e.what());
  }
  auto agents = as_indices(field(j, "agents"), "agents");
  std::optional<std::vector<PointId>> candidates;
  const Json& c = field(j, "candidates");
  if (c.is_string()) {
    if (c.get<std::string>() != "all") bad("candidates must be \"all\" or an array");
  } else {
    candidates = as_indices(c, "candidates");
  }
  Instance inst = Instance::make(std::move(space), std::move(agents), std::move(candidates),
                                 as_index(field(j, "k"), "k"));
  if (j.contains("labels")) {
    if (!j["labels"].is_array()) bad("labels must be an array of strings");
    for (const Json& l : j["labels"]) {
      if (!l.is_string()) bad("labels must be an array of strings");
      inst.labels.push_back(l.get<std::string>());
    }
  }
  return inst;
}

Json instance_to_json(const Instance& inst) {
  Json j{{"metric", metric_to_json(inst.metric().descriptor())}, {"agents", inst.agents}, {"k", inst.k}};
  if (inst.all_candidates) {
    j["candidates"] = "all";
  } else {
    j["candidates"] = inst.candidates;
  }
  if (!inst.labels.empty()) j["labels"] = inst.labels;
  return j;
}

Outcome outcome_from_json(const Json& j) {
  if (j.is_array()) return Outcome::of(as_indices(j, "W"));
  Outcome w = Outcome::of(as_indices(field(j, "W"), "W"));
  if (j.contains("alg") && j["alg"].is_string()) w.origin = j["alg"].get<std::string>();
  return w;
}

Json outcome_to_json(const Outcome& w) { return {{"W", w.centers}, {"alg", w.origin}}; }

Json trace_to_json(const Trace& trace) {
  Json events = Json::array();
  for (const TraceEvent& e : trace.events) {
    Json ev{{"delta", value_to_json(e.delta)}, {"kind", to_string(e.kind)}, {"agents", e.agents},
            {"remaining", e.remaining}};
    if (e.center) ev["center"] = *e.center;
    if (e.amount.numerator() != 0) ev["amount"] = to_string(e.amount);
    events.push_back(std::move(ev));
  }
  return events;
}

Trace trace_from_json(const Json& j) {
  if (!j.is_array()) bad("trace must be an array");
  Trace trace;
  for (const Json& ev : j) {
    TraceEvent e;
    e.delta = value_from_json(field(ev, "delta"));
    e.kind = parse_event_kind(field(ev, "kind").get<std::string>());
    e.agents = as_indices(field(ev, "agents"), "event agents");
    e.remaining = as_index(field(ev, "remaining"), "remaining");
    if (ev.contains("center")) e.center = as_index(ev["center"], "center");
    if (ev.contains("amount")) e.amount = as_rational(ev["amount"]);
    trace.events.push_back(std::move(e));
  }
  return trace;
}

Json value_to_json(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

double value_from_json(const Json& j) {
  if (j.is_string()) {
    if (j == "inf") return kInfinity;
    if (j == "-inf") return -kInfinity;
  }
  return as_number(j, "value");
}

Json report_to_json(const AuditReport& report) {
  Json params = Json::object();
  if (report.params.gamma) params["gamma"] = to_string(*report.params.gamma);
  if (report.params.q) params["q"] = *report.params.q;
  if (report.params.size_cap) params["size_cap"] = *report.params.size_cap;
  Json j{{"notion", to_string(report.notion)}, {"params", params}, {"status", to_string(report.status)}};
  if (report.value) j["value"] = value_to_json(*report.value);
  if (is_verdict_notion(report.notion)) {
    j["passed"] = report.passed ? Json(*report.passed) : Json(nullptr);
  }
  if (report.witness) j["witness"] = witness_to_json(*report.witness);
  return j;
}

AuditReport report_from_json(const Json& j) {
  AuditReport r;
  r.notion = parse_notion(field(j, "notion").get<std::string>());
  r.status = parse_status(field(j, "status").get<std::string>());
  if (j.contains("params")) {
    const Json& p = j["params"];
    if (p.contains("gamma")) r.params.gamma = as_rational(p["gamma"]);
    if (p.contains("q")) r.params.q = as_index(p["q"], "q");
    if (p.contains("size_cap")) r.params.size_cap = as_index(p["size_cap"], "size_cap");
  }
  if (j.contains("value")) r.value = value_from_json(j["value"]);
  if (j.contains("passed") && !j["passed"].is_null()) r.passed = j["passed"].get<bool>();
  if (j.contains("witness")) r.witness = witness_from_json(j["witness"]);
  return r;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad("'" + path + "': " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace propclust
