#pragma once

#include "concordia/expr.hpp"
#include "concordia/piecewise.hpp"
#include "concordia/shuffle.hpp"

#include <utility>
#include <vector>

namespace concordia {

/// Nodes (t, C(x(t),y(t))) of a shuffle's cdf restricted to one straight
/// path piece. The restriction is piecewise linear; its kinks happen only
/// where the path crosses a domain gridline, an image gridline, or one of
/// the support segments, and all of those are included, so the trapezoid
/// rule on these nodes integrates the restriction exactly.
std::vector<std::pair<Scalar, Scalar>> section_nodes(const ShuffleOfM& s,
                                                     const PathSegment& seg);

/// Exact integral of t -> C(x(t), y(t)) over the whole path. The path must
/// stay inside the unit square.
Scalar line_integral(const ShuffleOfM& s, const PlanarPath& path);

/// Exact integral of t -> x(t) * y(t) over the path (the independence
/// copula along the path; the integrand is quadratic per piece).
Scalar product_integral(const PlanarPath& path);

/// The graph of h parameterized by u: one path piece per support segment.
PlanarPath support_path(const ShuffleOfM& s);

/// Exact diagonal section u -> C(u,u) as a polyline. Requires a shuffle
/// normal form, or a convex combination of such (sections mix affinely).
PiecewiseLinear diagonal(const CopulaExpr& e);

/// Exact opposite-diagonal section u -> C(u, 1-u).
PiecewiseLinear opposite_diagonal(const CopulaExpr& e);

}  // namespace concordia
