#pragma once

#include "concordia/expr.hpp"
#include "concordia/measures.hpp"
#include "concordia/oracle.hpp"
#include "concordia/region.hpp"
#include "concordia/synthesis.hpp"

#include <json.hpp>

#include <string>

namespace concordia {

// Scalars serialize by arithmetic mode: rationals as "p/q" strings
// (denominator 1 collapses to "p"), doubles as JSON numbers. Integer JSON
// numbers parse as exact rationals, decimals as doubles.
nlohmann::json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

// Expression schema: a tagged union on "type":
//   {"type":"M"} | {"type":"W"} | {"type":"Pi"}
//   {"type":"shuffle","splits":[...],"perm":[...],"flips":[...]}
//   {"type":"ordinal","blocks":[{"a":...,"b":...,"summand":...}]}
//   {"type":"reflect","axis":1|2,"of":...}
//   {"type":"convex","parts":[{"w":...,"of":...}]}
nlohmann::json expr_to_json(const CopulaExpr& e);
ExprPtr expr_from_json(const nlohmann::json& j);

/// Parses an expression from JSON text. Syntax problems raise ParseError
/// with line/column; structural problems raise ValidationError.
ExprPtr parse_expr(const std::string& text);

nlohmann::json measures_to_json(const MeasureVector& m);
nlohmann::json mc_to_json(const McMeasures& m);
nlohmann::json point_to_json(const RegionPoint& p);
nlohmann::json synthesis_to_json(const SynthesisResult& r);

/// {"vertices":[{"label","phi","gamma","tau"}...],"faces":[{"label","cycle"}...]}
nlohmann::json region_mesh_json();
/// Triangle mesh, faces fanned from their first vertex.
std::string region_mesh_obj();

/// Row-major cell masses, one row of the u index per line, "n=<n>" header.
std::string checkerboard_csv(const Checkerboard& cb);

}  // namespace concordia
