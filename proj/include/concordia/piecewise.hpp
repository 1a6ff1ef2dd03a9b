#pragma once

#include "concordia/scalar.hpp"

#include <vector>

namespace concordia {

/// Piecewise-linear function on [0,1]: strictly increasing breakpoints
/// starting at 0 and ending at 1, a value at each, linear in between.
class PiecewiseLinear {
 public:
  PiecewiseLinear(std::vector<Scalar> breakpoints, std::vector<Scalar> values);

  const std::vector<Scalar>& breakpoints() const { return x_; }
  const std::vector<Scalar>& values() const { return y_; }

  Scalar operator()(const Scalar& x) const;

  /// Exact integral over [0,1] (trapezoids are exact here).
  Scalar integral() const;

  /// a*f + b*g on the merged breakpoint set.
  static PiecewiseLinear combine(const Scalar& a, const PiecewiseLinear& f,
                                 const Scalar& b, const PiecewiseLinear& g);

 private:
  std::vector<Scalar> x_, y_;
};

/// A parameterized straight segment in the plane: the point moves linearly
/// from (x0,y0) at t0 to (x1,y1) at t1. A path is a list of such pieces
/// with increasing parameter ranges; positions may jump between pieces
/// (graphs of shuffles do exactly that at their cuts).
struct PathSegment {
  Scalar t0, t1;
  Scalar x0, y0, x1, y1;
};

using PlanarPath = std::vector<PathSegment>;

/// Straight path across the unit square, parameterized over [0,1].
PlanarPath segment_path(const Scalar& x0, const Scalar& y0, const Scalar& x1,
                        const Scalar& y1);
/// The main diagonal t -> (t, t).
PlanarPath diagonal_path();
/// The opposite diagonal t -> (t, 1-t).
PlanarPath opposite_diagonal_path();

}  // namespace concordia
