#include "concordia/region.hpp"

#include "concordia/errors.hpp"

#include <algorithm>
#include <map>

namespace concordia {

namespace {

Rational rat(long long num, long long den = 1) { return Rational(num, den); }

Polyhedron build_polyhedron() {
  Polyhedron p;
  p.halfspaces = {
      {"F1", rat(-2), rat(0), rat(0)},  {"F2", rat(-2), rat(3), rat(-3)},
      {"F3", rat(4), rat(-6), rat(3)},  {"F4", rat(4), rat(0), rat(-3)},
      {"F5", rat(-8), rat(6), rat(0)},  {"F6", rat(-2), rat(0), rat(3)},
      {"F7", rat(-2), rat(3), rat(0)},
  };
  p.vertices = {
      {"P1", rat(-1, 2), rat(-1), rat(-1)}, {"P2", rat(-1, 2), rat(-1, 2), rat(-1, 2)},
      {"P3", rat(-1, 2), rat(-1, 2), rat(0)}, {"P4", rat(1), rat(1), rat(1)},
      {"P5", rat(1, 4), rat(1, 2), rat(0)},  {"P6", rat(1, 4), rat(1, 2), rat(1, 2)},
  };
  p.faces = {
      {"F1", {"P1", "P2", "P3"}}, {"F2", {"P1", "P2", "P5"}},
      {"F3", {"P1", "P3", "P4"}}, {"F4", {"P1", "P4", "P5"}},
      // the quadrilateral face; planar cyclic order
      {"F5", {"P2", "P3", "P6", "P5"}},
      {"F6", {"P3", "P4", "P6"}}, {"F7", {"P4", "P5", "P6"}},
  };
  p.edges = {
      {"P1P2", {"F1", "F2"}}, {"P1P3", {"F1", "F3"}}, {"P1P4", {"F3", "F4"}},
      {"P1P5", {"F2", "F4"}}, {"P2P3", {"F1", "F5"}}, {"P2P5", {"F2", "F5"}},
      {"P3P4", {"F3", "F6"}}, {"P3P6", {"F5", "F6"}}, {"P4P5", {"F4", "F7"}},
      {"P4P6", {"F6", "F7"}}, {"P5P6", {"F5", "F7"}},
  };
  return p;
}

const RegionVertex& vertex(const std::string& label) {
  for (const RegionVertex& v : polyhedron().vertices)
    if (v.label == label) return v;
  throw ArgumentError("unknown vertex " + label);
}

}  // namespace

const Polyhedron& polyhedron() {
  static const Polyhedron p = build_polyhedron();
  return p;
}

Scalar default_region_tol(const RegionPoint& p) {
  return p.is_rational() ? Scalar(0) : Scalar::from_double(1e-9);
}

ContainsResult contains(const RegionPoint& p, const Scalar& tol) {
  if (tol < Scalar(0)) throw ArgumentError("tolerance must be nonnegative");
  Rational phi = p.phi.to_rational(), gamma = p.gamma.to_rational(),
           tau = p.tau.to_rational(), t = tol.to_rational();
  ContainsResult out;
  bool ok = true;
  for (const HalfSpace& hs : polyhedron().halfspaces) {
    Rational lhs = hs.cphi * phi + hs.cgamma * gamma + hs.ctau * tau;
    if (lhs > 1 + t) {
      out.violated.push_back(hs.face);
      ok = false;
    } else if (lhs >= 1 - t) {
      out.active.push_back(hs.face);
    }
  }
  out.location = !ok ? Location::Outside
                     : (out.active.empty() ? Location::Inside : Location::Boundary);
  return out;
}

ContainsResult contains(const RegionPoint& p) { return contains(p, default_region_tol(p)); }

namespace {

struct Constraint2D {
  const char* name;
  Rational cphi, cgamma;  // cphi*phi + cgamma*gamma <= 1
};

const Constraint2D kProjection[] = {
    {"-2*phi <= 1", rat(-2), rat(0)},
    {"4*phi - 3*gamma <= 1", rat(4), rat(-3)},
    {"-2*phi + 3*gamma <= 1", rat(-2), rat(3)},
    {"-8*phi + 6*gamma <= 1", rat(-8), rat(6)},
};

}  // namespace

std::pair<Scalar, Scalar> tau_bounds(const Scalar& phi, const Scalar& gamma,
                                     const Scalar& tol) {
  Rational ph = phi.to_rational(), ga = gamma.to_rational(), t = tol.to_rational();
  for (const Constraint2D& c : kProjection) {
    Rational lhs = c.cphi * ph + c.cgamma * ga;
    if (lhs > 1 + t)
      throw OutOfRegion("(phi, gamma) outside the projection: violates " +
                        std::string(c.name));
  }
  const Scalar third = frac(1, 3), k43 = frac(4, 3), k23 = frac(2, 3);
  Scalar lo = max(k43 * phi - third, -k23 * phi + gamma - third);
  Scalar hi = min(k23 * phi + third, -k43 * phi + Scalar(2) * gamma + third);
  if (lo > hi) {
    // only possible through float noise at the projection boundary
    Scalar mid = (lo + hi) / Scalar(2);
    lo = hi = mid;
  }
  return {lo, hi};
}

std::pair<Scalar, Scalar> tau_bounds(const Scalar& phi, const Scalar& gamma) {
  Scalar tol = (phi.is_rational() && gamma.is_rational()) ? Scalar(0)
                                                          : Scalar::from_double(1e-9);
  return tau_bounds(phi, gamma, tol);
}

RegionPoint involution_A(const RegionPoint& p) {
  return RegionPoint{p.phi - frac(3, 2) * p.gamma, -p.gamma, -p.tau};
}

Classification classify(const RegionPoint& p, const Scalar& tol) {
  ContainsResult c = contains(p, tol);
  if (c.location == Location::Outside)
    throw OutOfRegion("point outside the region; violated: " +
                      [&] {
                        std::string s;
                        for (const auto& f : c.violated) s += f + " ";
                        return s;
                      }());
  Classification out;
  out.faces = c.active;
  auto is_active = [&](const std::string& f) {
    return std::find(c.active.begin(), c.active.end(), f) != c.active.end();
  };
  for (const RegionEdge& e : polyhedron().edges)
    if (is_active(e.faces[0]) && is_active(e.faces[1])) out.edges.push_back(e.label);
  // A vertex is active when all faces meeting at it are.
  std::map<std::string, std::vector<std::string>> vertex_faces;
  for (const RegionFace& f : polyhedron().faces)
    for (const std::string& v : f.cycle) vertex_faces[v].push_back(f.label);
  for (const auto& [v, faces] : vertex_faces) {
    bool all = true;
    for (const std::string& f : faces) all = all && is_active(f);
    if (all) out.vertices.push_back(v);
  }
  if (!out.vertices.empty())
    out.most_specific = out.vertices.front();
  else if (!out.edges.empty())
    out.most_specific = out.edges.front();
  else if (!out.faces.empty())
    out.most_specific = out.faces.front();
  else
    out.most_specific = "interior";
  return out;
}

Classification classify(const RegionPoint& p) { return classify(p, default_region_tol(p)); }

Rational region_volume() {
  const Polyhedron& p = polyhedron();
  // Interior reference point: the vertex centroid.
  Rational cx(0), cy(0), cz(0);
  for (const RegionVertex& v : p.vertices) {
    cx += v.phi;
    cy += v.gamma;
    cz += v.tau;
  }
  auto nv = static_cast<long long>(p.vertices.size());
  cx /= nv;
  cy /= nv;
  cz /= nv;

  Rational six_vol(0);
  for (const RegionFace& f : p.faces) {
    const RegionVertex& a = vertex(f.cycle[0]);
    for (size_t i = 1; i + 1 < f.cycle.size(); ++i) {
      const RegionVertex& b = vertex(f.cycle[i]);
      const RegionVertex& c = vertex(f.cycle[i + 1]);
      Rational ax = a.phi - cx, ay = a.gamma - cy, az = a.tau - cz;
      Rational bx = b.phi - cx, by = b.gamma - cy, bz = b.tau - cz;
      Rational ex = c.phi - cx, ey = c.gamma - cy, ez = c.tau - cz;
      Rational det = ax * (by * ez - bz * ey) - ay * (bx * ez - bz * ex) +
                     az * (bx * ey - by * ex);
      six_vol += det < 0 ? -det : det;
    }
  }
  return six_vol / 6;
}

namespace {

// Convex hull area of exact 2D points (monotone chain + shoelace).
Rational hull_area(std::vector<std::pair<Rational, Rational>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return Rational(0);
  auto cross = [](const auto& o, const auto& a, const auto& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<Rational, Rational>> hull;
  for (int pass = 0; pass < 2; ++pass) {
    size_t start = hull.size();
    for (const auto& pt : pts) {
      while (hull.size() >= start + 2 &&
             cross(hull[hull.size() - 2], hull.back(), pt) <= 0)
        hull.pop_back();
      hull.push_back(pt);
    }
    hull.pop_back();
    std::reverse(pts.begin(), pts.end());
  }
  Rational twice(0);
  for (size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    twice += a.first * b.second - b.first * a.second;
  }
  return (twice < 0 ? -twice : twice) / 2;
}

}  // namespace

Rational projection_area(Plane plane) {
  std::vector<std::pair<Rational, Rational>> pts;
  for (const RegionVertex& v : polyhedron().vertices) {
    switch (plane) {
      case Plane::PhiGamma:
        pts.emplace_back(v.phi, v.gamma);
        break;
      case Plane::PhiTau:
        pts.emplace_back(v.phi, v.tau);
        break;
      case Plane::GammaTau:
        pts.emplace_back(v.gamma, v.tau);
        break;
    }
  }
  return hull_area(std::move(pts));
}

Rational mean_tau_spread() { return region_volume() / projection_area(Plane::PhiGamma); }

Rational box_volume_fraction() {
  // box [-1/2,1] x [-1,1] x [-1,1]
  return region_volume() / Rational(6);
}

}  // namespace concordia
