#pragma once

#include "concordia/scalar.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace concordia {

/// A candidate (phi, gamma, tau) triple. Nothing about membership is
/// implied; ask the region.
struct RegionPoint {
  Scalar phi, gamma, tau;

  bool is_rational() const {
    return phi.is_rational() && gamma.is_rational() && tau.is_rational();
  }
};

/// The attainable region of (phi, gamma, tau) is the polyhedron cut out by
/// seven half-spaces, one per face. All geometry below is exact rational;
/// float inputs are converted by their binary expansion and compared with
/// an explicit tolerance.
struct HalfSpace {
  std::string face;  // F1..F7
  Rational cphi, cgamma, ctau;  // cphi*phi + cgamma*gamma + ctau*tau <= 1
};

struct RegionVertex {
  std::string label;  // P1..P6
  Rational phi, gamma, tau;
};

struct RegionFace {
  std::string label;
  std::vector<std::string> cycle;  // vertex labels in planar cyclic order
};

struct RegionEdge {
  std::string label;                  // e.g. "P5P6"
  std::array<std::string, 2> faces;   // the two faces whose equalities cut it
};

struct Polyhedron {
  std::vector<HalfSpace> halfspaces;
  std::vector<RegionVertex> vertices;
  std::vector<RegionFace> faces;
  std::vector<RegionEdge> edges;
};

const Polyhedron& polyhedron();

enum class Location { Inside, Boundary, Outside };

struct ContainsResult {
  Location location = Location::Outside;
  std::vector<std::string> active;    // faces whose equality holds within tol
  std::vector<std::string> violated;  // faces whose inequality fails beyond tol
};

/// Default query tolerance: 0 for all-rational points, 1e-9 otherwise.
Scalar default_region_tol(const RegionPoint& p);

ContainsResult contains(const RegionPoint& p, const Scalar& tol);
ContainsResult contains(const RegionPoint& p);

/// [tau_min, tau_max] attainable for given (phi, gamma). Throws OutOfRegion
/// (naming the violated 2D constraint) if (phi, gamma) is outside the
/// projection quadrilateral.
std::pair<Scalar, Scalar> tau_bounds(const Scalar& phi, const Scalar& gamma,
                                     const Scalar& tol);
std::pair<Scalar, Scalar> tau_bounds(const Scalar& phi, const Scalar& gamma);

/// The linear involution (phi, gamma, tau) -> (phi - 3/2 gamma, -gamma, -tau)
/// induced by the sigma_2 reflection; maps the region onto itself.
RegionPoint involution_A(const RegionPoint& p);

struct Classification {
  std::vector<std::string> faces;     // active faces
  std::vector<std::string> edges;     // active edges (both faces active)
  std::vector<std::string> vertices;  // active vertices (all faces active)
  std::string most_specific;          // "interior", "F3", "P5P6", "P4", ...
};

/// Full active set of a point inside or on the region; throws OutOfRegion
/// for outside points.
Classification classify(const RegionPoint& p, const Scalar& tol);
Classification classify(const RegionPoint& p);

enum class Plane { PhiGamma, PhiTau, GammaTau };

/// Exact volume of the region, computed from the vertex/face lattice by
/// signed tetrahedra (value 3/16).
Rational region_volume();

/// Exact area of the projection onto a coordinate plane (9/16, 3/4, 1).
Rational projection_area(Plane plane);

/// volume / area of the (phi, gamma) projection: the mean attainable tau
/// spread once phi and gamma are fixed (1/3).
Rational mean_tau_spread();

/// volume / volume of the bounding box [-1/2,1] x [-1,1] x [-1,1] (1/32).
Rational box_volume_fraction();

}  // namespace concordia
