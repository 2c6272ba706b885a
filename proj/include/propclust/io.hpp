#pragma once

#include <string>

#include <json.hpp>

#include "propclust/algorithms.hpp"
#include "propclust/instance.hpp"
#include "propclust/report.hpp"

namespace propclust {

using Json = nlohmann::json;

/// Instance file:
///   {"metric": {"type": "graph", "nodes": 4, "edges": [[0, 1, 2], [1, 2, [3, 2]]]},
///    "agents": [0, 1, 2], "candidates": "all" | [ids], "k": 2, "labels"?: [names]}
/// Metric types: "graph" (weights as integers, [num, den] or "num/den"),
/// "points" ({"dim", "coords", "norm": "l1"|"l2"|"linf"}), "matrix" ({"d"}).
/// Malformed input throws Error("invalid input", ...).
Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);

/// Accepts {"W": [...]} or a bare array of point ids.
Outcome outcome_from_json(const Json& j);
Json outcome_to_json(const Outcome& w);

Json trace_to_json(const Trace& trace);
Trace trace_from_json(const Json& j);

/// Distances and values serialize as numbers, +inf as the string "inf".
Json report_to_json(const AuditReport& report);
AuditReport report_from_json(const Json& j);

Json value_to_json(double v);
double value_from_json(const Json& j);

/// Reads and parses a JSON file; throws Error("invalid input") on failure.
Json read_json_file(const std::string& path);
/// Pretty-printed with two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace propclust
