#pragma once

#include "heis/audit.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace heis {

using Json = nlohmann::json;

Json to_json(const Rational& r);  // "p/q" string
Json to_json(const Poly& p);      // canonical text
Json to_json(const FrameVectorField& X);
Json to_json(const Point3& p);

Json geometry_json(const Geometry& geo);

/// `matched` is the span comparison with the stated family, or nullopt
/// when the text states none.
Json solution_json(const SolutionBasis& sol, const MetricModel& model,
                   std::optional<bool> matched);

Json operator_json(const std::vector<OperatorComponent>& comps);

Json algebra_json(const AlgebraReport& rep);
Json comparison_json(const CollineationComparison& cmp);

Json causal_json(const CausalReport& rep);
Json scan_json(const ScanSummary& s);

Json audit_json(const AuditReport& rep);

/// Reads {"basis": "frame"|"coord", "components": [p1, p2, p3]} and returns
/// the field in frame components. Throws std::invalid_argument.
FrameVectorField field_from_json(const Json& j, const MetricModel& model);

/// Reads [[x, y, z], ...] with rational strings or integers.
std::vector<Point3> grid_from_json(const Json& j);

/// Plain-text rendering of a JSON document: one "key: value" line per
/// scalar, nested objects indented, arrays of scalars on one line.
std::string render_text(const Json& j);

}  // namespace heis
