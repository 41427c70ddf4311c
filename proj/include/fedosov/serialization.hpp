#pragma once

#include <string>

#include <json.hpp>

#include "fedosov/chart.hpp"
#include "fedosov/decomposition.hpp"
#include "fedosov/lie_algebra.hpp"
#include "fedosov/models.hpp"
#include "fedosov/report.hpp"

namespace fedosov {

using Json = nlohmann::ordered_json;

/// Reads a whole file and parses it as JSON. Throws SchemaError on I/O or
/// syntax problems.
Json read_json_file(const std::string& path);

/// "(p,q)" for p contravariant and q covariant slots.
std::string valence_string(const std::vector<Slot>& slots);
/// Covariant slots first, then contravariant; throws SchemaError on bad text.
std::vector<Slot> parse_valence(const std::string& text);

/// Sparse component map {"i,j,k": "p/q"} with 1-based indices.
Json components_to_json(const PointTensor& t);
void components_from_json(const Json& j, PointTensor& t);

/// {"n", "valence", "components"}.
Json tensor_to_json(const PointTensor& t);
/// Throws SchemaError when indices exceed 2n or fields are missing.
PointTensor tensor_from_json(const Json& j);

/// {"basis": [...], "brackets": {"a,b": {"c": "p/q"}}, "subspaces": {...}}.
Json lie_algebra_to_json(const LieAlgebraPresentation& g);
LieAlgebraPresentation lie_algebra_from_json(const Json& j);

/// {"n", "curvature", "torsion", "aux": [{"name", "valence", "components"}]};
/// ω is implicit and not written.
Json model_to_json(const InfinitesimalModel& m);
InfinitesimalModel model_from_json(const Json& j);

/// {"coords", "omega": {"i,j": text}, "christoffel": {"k,i,j": text},
///  "fields": {name: [texts] or {"valence", "components"}},
///  "structure": {"linear_type": name} or {"tensor": name}, "excluded_locus"}.
/// Christoffel keys list the upper index first, as in Γᵏᵢⱼ.
Json chart_to_json(const Chart& c);
Chart chart_from_json(const Json& j);

Json report_to_json(const std::string& command, const VerificationReport& r, const Json& artifacts);

Json matrix_to_json(const RationalMatrix& m);

}  // namespace fedosov
