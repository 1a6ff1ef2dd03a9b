#pragma once

#include "concordia/expr.hpp"
#include "concordia/measures.hpp"

#include <cstdint>
#include <vector>

namespace concordia {

/// n x n cell masses of a checkerboard approximation. Uniform marginals:
/// every row and column sums to 1/n. Cell (iu, iv) covers
/// [iu/n,(iu+1)/n] x [iv/n,(iv+1)/n]; storage is row-major in iu.
struct Checkerboard {
  int n = 0;
  std::vector<double> mass;

  double at(int iu, int iv) const { return mass[static_cast<size_t>(iu) * n + iv]; }
  double& at(int iu, int iv) { return mass[static_cast<size_t>(iu) * n + iv]; }

  /// The checkerboard copula itself (piecewise bilinear).
  double cdf(double u, double v) const;
};

/// Discretizes an expression by exact cell volumes. Throws ValidationError
/// if a cell volume is negative beyond -1e-10 or marginals are off by more
/// than 1e-12.
Checkerboard checkerboard_of(const CopulaExpr& e, int n);

/// All six coefficients of the checkerboard copula in closed form
/// (each defining integral reduces to a finite sum over cells; see the
/// derivation notes in oracle.cpp). Values are flagged inexact: they are
/// estimates of the underlying expression's coefficients.
MeasureVector cb_measures(const Checkerboard& cb);

/// A Monte Carlo estimate: the full-sample statistic plus a batch-means
/// standard error (10 batches). Reproducible bit for bit per (seed, samples).
struct McEstimate {
  double value = 0;
  double stderr_ = 0;
  long long samples = 0;
  std::uint64_t seed = 0;
};

struct McMeasures {
  McEstimate rho, tau, phi, gamma, beta, xi;
};

/// Rank-based estimators for rho, tau, phi, gamma, beta and the
/// adjacent-rank estimator for xi, all from one seeded sample.
McMeasures mc_measures(const CopulaExpr& e, long long samples, std::uint64_t seed);

}  // namespace concordia
