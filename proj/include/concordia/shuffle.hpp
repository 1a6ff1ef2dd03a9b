#pragma once

#include "concordia/scalar.hpp"

#include <vector>

namespace concordia {

/// One straight piece of a measure-preserving bijection of [0,1]:
/// the domain interval [x0,x1] is mapped onto the band [y0,y1] with
/// slope `flip` (+1: h(x0)=y0 ascending, -1: h(x0)=y1 descending).
/// Widths agree: x1-x0 == y1-y0.
struct Segment {
  Scalar x0, x1, y0, y1;
  int flip = 1;

  Scalar width() const { return x1 - x0; }
};

/// A shuffle of M: the interval is cut into n pieces, the pieces are
/// rearranged by a permutation and each may be traversed forward or
/// backward. All probability mass sits on the n diagonal segments
/// [u_{i-1},u_i] x [v_{pi(i)-1},v_{pi(i)}].
///
/// The raw cut data is kept exactly as given (zero-width pieces are legal
/// and show up in the paper families at boundary parameters); algorithms
/// run on the support view with zero-width pieces dropped. `normalized()`
/// additionally merges adjacent co-linear pieces and is the canonical
/// form used for structural comparisons.
class ShuffleOfM {
 public:
  /// splits: interior cut points u_1..u_{n-1}, nondecreasing in [0,1];
  /// perm:   images pi(1..n), a bijection of {1..n}, 1-based;
  /// flips:  orientation of each piece, entries +1 or -1.
  ShuffleOfM(std::vector<Scalar> splits, std::vector<int> perm, std::vector<int> flips);

  static ShuffleOfM identity();       // the copula M
  static ShuffleOfM antidiagonal();   // the copula W

  /// Builds a shuffle from a segment list that partitions both the domain
  /// and the image. With `merge` set, adjacent co-linear segments are
  /// fused and zero-width segments dropped.
  static ShuffleOfM from_segments(std::vector<Segment> segments, bool merge);

  int piece_count() const { return static_cast<int>(perm_.size()); }
  const std::vector<Scalar>& splits() const { return splits_; }
  const std::vector<int>& perm() const { return perm_; }
  const std::vector<int>& flips() const { return flips_; }
  /// Image breakpoints v_0..v_n of the raw cut.
  const std::vector<Scalar>& images() const { return images_; }

  /// All n raw segments, zero-width ones included.
  std::vector<Segment> raw_segments() const;
  /// Support segments in domain order, zero-width pieces dropped.
  const std::vector<Segment>& support() const { return support_; }

  /// Canonical form: zero-width pieces dropped, co-linear runs merged.
  ShuffleOfM normalized() const;

  /// Domain breakpoints 0=x_0<...<x_m=1 of the support view.
  std::vector<Scalar> domain_breakpoints() const;
  /// Image breakpoints 0=y_0<...<y_m=1 of the support view.
  std::vector<Scalar> image_breakpoints() const;

  /// The bijection h. Interior breakpoints of the support view map to
  /// their image breakpoints; within a piece the half-open convention
  /// [x0, x1) applies (the final piece is closed).
  Scalar h(const Scalar& u) const;

  /// Exact C(u,v) = lambda({t <= u : h(t) <= v}).
  Scalar cdf(const Scalar& u, const Scalar& v) const;
  /// Double fast paths used by the brute-force oracles and the sampler.
  double cdf(double u, double v) const;
  double h(double u) const;

  /// sigma_1 (axis 1) or sigma_2 (axis 2) reflection, again a shuffle.
  ShuffleOfM reflected(int axis) const;

  bool is_rational() const;

 private:
  ShuffleOfM() = default;
  void finish_from_raw();

  std::vector<Scalar> splits_;   // interior cut points, size n-1
  std::vector<int> perm_;        // size n
  std::vector<int> flips_;       // size n
  std::vector<Scalar> images_;   // v_0..v_n, size n+1

  std::vector<Segment> support_;  // derived, zero-width dropped
  struct DSeg {
    double x0, x1, y0, y1;
    int flip;
  };
  std::vector<DSeg> dsupport_;    // double mirror of support_
};

}  // namespace concordia
