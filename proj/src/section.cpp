#include "concordia/section.hpp"

#include "concordia/errors.hpp"

#include <algorithm>

namespace concordia {

namespace {

const Scalar kZero(0), kOne(1);

bool inside_unit(const Scalar& v) {
  if (v.is_rational()) return v >= kZero && v <= kOne;
  double d = v.to_double();
  return d >= -1e-12 && d <= 1.0 + 1e-12;
}

struct Affine {  // value at parameter tau in [0,1]
  Scalar c0, c1;
  Scalar operator()(const Scalar& tau) const { return c0 + tau * (c1 - c0); }
};

}  // namespace

std::vector<std::pair<Scalar, Scalar>> section_nodes(const ShuffleOfM& s,
                                                     const PathSegment& seg) {
  if (!(seg.t0 < seg.t1)) throw ArgumentError("path piece with empty parameter range");
  for (const Scalar* c : {&seg.x0, &seg.y0, &seg.x1, &seg.y1})
    if (!inside_unit(*c)) throw ArgumentError("path leaves the unit square");

  Affine x{seg.x0, seg.x1}, y{seg.y0, seg.y1};
  Scalar dx = seg.x1 - seg.x0, dy = seg.y1 - seg.y0;

  std::vector<Scalar> taus{kZero, kOne};
  auto add_tau = [&](const Scalar& tau) {
    if (tau > kZero && tau < kOne) taus.push_back(tau);
  };

  // Gridline crossings.
  if (dx != kZero)
    for (const Scalar& xb : s.domain_breakpoints()) add_tau((xb - seg.x0) / dx);
  if (dy != kZero)
    for (const Scalar& yb : s.image_breakpoints()) add_tau((yb - seg.y0) / dy);

  // Crossings with the support segments themselves.
  for (const Segment& sup : s.support()) {
    // flip +1 lies on y - x = y0 - x0, flip -1 on y + x = y1 + x0.
    Scalar denom = sup.flip == 1 ? dy - dx : dy + dx;
    if (denom == kZero) continue;  // parallel; overlaps end on gridlines
    Scalar rhs = sup.flip == 1 ? (sup.y0 - sup.x0) - (seg.y0 - seg.x0)
                               : (sup.y1 + sup.x0) - (seg.y0 + seg.x0);
    Scalar tau = rhs / denom;
    if (tau > kZero && tau < kOne) {
      Scalar px = x(tau);
      if (px >= sup.x0 && px <= sup.x1) taus.push_back(tau);
    }
  }

  std::sort(taus.begin(), taus.end());
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());

  std::vector<std::pair<Scalar, Scalar>> nodes;
  nodes.reserve(taus.size());
  Scalar span = seg.t1 - seg.t0;
  for (const Scalar& tau : taus)
    nodes.emplace_back(seg.t0 + tau * span, s.cdf(x(tau), y(tau)));
  return nodes;
}

Scalar line_integral(const ShuffleOfM& s, const PlanarPath& path) {
  Scalar acc(0);
  for (const PathSegment& seg : path) {
    auto nodes = section_nodes(s, seg);
    for (size_t i = 0; i + 1 < nodes.size(); ++i)
      acc += (nodes[i + 1].first - nodes[i].first) *
             (nodes[i].second + nodes[i + 1].second) / Scalar(2);
  }
  return acc;
}

Scalar product_integral(const PlanarPath& path) {
  Scalar acc(0);
  const Scalar half = frac(1, 2), six(6);
  for (const PathSegment& seg : path) {
    for (const Scalar* c : {&seg.x0, &seg.y0, &seg.x1, &seg.y1})
      if (!inside_unit(*c)) throw ArgumentError("path leaves the unit square");
    Scalar xm = (seg.x0 + seg.x1) * half, ym = (seg.y0 + seg.y1) * half;
    // Simpson is exact for the quadratic integrand.
    acc += (seg.t1 - seg.t0) *
           (seg.x0 * seg.y0 + Scalar(4) * xm * ym + seg.x1 * seg.y1) / six;
  }
  return acc;
}

PlanarPath support_path(const ShuffleOfM& s) {
  PlanarPath path;
  for (const Segment& sup : s.support()) {
    if (sup.flip == 1)
      path.push_back({sup.x0, sup.x1, sup.x0, sup.y0, sup.x1, sup.y1});
    else
      path.push_back({sup.x0, sup.x1, sup.x0, sup.y1, sup.x1, sup.y0});
  }
  return path;
}

namespace {

PiecewiseLinear section_01(const ShuffleOfM& s, const PlanarPath& path) {
  auto nodes = section_nodes(s, path.at(0));
  std::vector<Scalar> xs, ys;
  xs.reserve(nodes.size());
  ys.reserve(nodes.size());
  for (auto& [t, v] : nodes) {
    xs.push_back(t);
    ys.push_back(v);
  }
  return PiecewiseLinear(std::move(xs), std::move(ys));
}

PiecewiseLinear section_recursive(const CopulaExpr& e, const PlanarPath& path) {
  if (e.kind() != CopulaExpr::Kind::Convex) return section_01(as_shuffle(e), path);

  std::vector<std::pair<Scalar, PiecewiseLinear>> parts;
  for (const ConvexPart& p : e.parts())
    parts.emplace_back(p.weight, section_recursive(*p.part, path));
  std::vector<Scalar> xs;
  for (auto& [w, pl] : parts)
    xs.insert(xs.end(), pl.breakpoints().begin(), pl.breakpoints().end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Scalar> ys;
  ys.reserve(xs.size());
  for (const Scalar& x : xs) {
    Scalar v(0);
    for (auto& [w, pl] : parts) v += w * pl(x);
    ys.push_back(v);
  }
  return PiecewiseLinear(std::move(xs), std::move(ys));
}

}  // namespace

PiecewiseLinear diagonal(const CopulaExpr& e) {
  return section_recursive(e, diagonal_path());
}

PiecewiseLinear opposite_diagonal(const CopulaExpr& e) {
  return section_recursive(e, opposite_diagonal_path());
}

}  // namespace concordia
