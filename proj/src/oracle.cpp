#include "concordia/oracle.hpp"

#include "concordia/errors.hpp"
#include "concordia/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace concordia {

// ---------------------------------------------------------------------------
// Closed forms on a checkerboard copula.
//
// Let h = 1/n and let m[i][j] be the cell masses. The copula C is piecewise
// bilinear; write P[i][j] = sum_{i'<=i, j'<=j} m[i'][j'] for its corner
// values (P[0][*] = P[*][0] = 0) and
//
//     mean4(i,j) = (P[i-1][j-1] + P[i][j-1] + P[i-1][j] + P[i][j]) / 4,
//
// the cell average of C (the integral of a bilinear function over a cell is
// the cell area times its corner mean, and the center value equals the
// corner mean).
//
// rho:  12 * sum_ij h^2 * mean4(i,j) - 3.
//
// tau:  4 * int C dC - 1. The conditioning measure is uniform with mass
//       m[i][j] on cell (i,j), so int_{cell} C dC = m[i][j] * mean4(i,j)
//       and tau = 4 * sum_ij m[i][j] * mean4(i,j) - 1.
//
// phi:  the diagonal crosses cells (i,i); there delta(u) = C(u,u) is
//       quadratic, so Simpson is exact:
//       int_cell delta = (h/6) (2 P[i-1][i-1] + P[i][i-1] + P[i-1][i] + 2 P[i][i]).
//
// gamma: the opposite diagonal crosses cells (i, n+1-i); with corners
//       c00..c11 of that cell, Simpson again gives
//       int_cell omega = (h/6) (c00 + 2 c10 + 2 c01 + c11),
//       and gamma = 4 int delta + 4 int omega - 2.
//
// beta: 4 * C(1/2, 1/2) - 1 by bilinear evaluation.
//
// xi:   on column i the partial derivative d1 C(u,v) does not depend on u
//       and equals the conditional cdf g_i(v) = sum_j n m[i][j] ramp_j(v),
//       a piecewise-linear ramp per row cell. With A = n * (mass of column
//       i below row j) and B = n * m[i][j],
//       int_{row j} g_i^2 = h (A^2 + A B + B^2 / 3),
//       and xi = 6 sum_i h sum_j h (A^2 + A B + B^2/3) - 2.
//
// Spot checks: the n=1 board is the independence copula and all six forms
// give 0; the diagonal board of M at resolution n gives tau = phi = xi =
// 1 - 1/n, gamma = 1 - 2/(3n), rho = 1 - 1/n^2.
// ---------------------------------------------------------------------------

double Checkerboard::cdf(double u, double v) const {
  u = std::min(1.0, std::max(0.0, u));
  v = std::min(1.0, std::max(0.0, v));
  double su = u * n, sv = v * n;
  int iu = std::min(n - 1, static_cast<int>(su));
  int iv = std::min(n - 1, static_cast<int>(sv));
  double x = su - iu, y = sv - iv;
  // corner values of cell (iu, iv) via prefix mass of this cell's corners
  double c00 = 0, c10 = 0, c01 = 0, c11 = 0;
  for (int i = 0; i <= iu; ++i)
    for (int j = 0; j <= iv; ++j) {
      double m = at(i, j);
      bool right = i == iu, top = j == iv;
      if (!right && !top) c00 += m;
      if (!top) c10 += m;
      if (!right) c01 += m;
      c11 += m;
    }
  return (1 - x) * (1 - y) * c00 + x * (1 - y) * c10 + (1 - x) * y * c01 + x * y * c11;
}

Checkerboard checkerboard_of(const CopulaExpr& e, int n) {
  if (n < 1) throw ArgumentError("checkerboard resolution must be >= 1");
  const size_t np = static_cast<size_t>(n) + 1;
  std::vector<double> corner(np * np);
  for (size_t i = 0; i < np; ++i)
    for (size_t j = 0; j < np; ++j)
      corner[i * np + j] =
          eval(e, static_cast<double>(i) / n, static_cast<double>(j) / n);

  Checkerboard cb;
  cb.n = n;
  cb.mass.resize(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double v = corner[(i + 1) * np + (j + 1)] - corner[(i + 1) * np + j] -
                 corner[i * np + (j + 1)] + corner[i * np + j];
      if (v < -1e-10)
        throw ValidationError("expression is not 2-increasing: cell volume " +
                              std::to_string(v));
      cb.at(i, j) = std::max(0.0, v);
    }
  }

  const double want = 1.0 / n;
  for (int i = 0; i < n; ++i) {
    double row = 0, col = 0;
    for (int j = 0; j < n; ++j) {
      row += cb.at(i, j);
      col += cb.at(j, i);
    }
    if (std::abs(row - want) > 1e-12 || std::abs(col - want) > 1e-12)
      throw ValidationError("checkerboard marginals are not uniform");
  }
  return cb;
}

MeasureVector cb_measures(const Checkerboard& cb) {
  const int n = cb.n;
  const double h = 1.0 / n;
  const size_t np = static_cast<size_t>(n) + 1;

  std::vector<double> P(np * np, 0.0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      P[i * np + j] =
          cb.at(i - 1, j - 1) + P[(i - 1) * np + j] + P[i * np + (j - 1)] - P[(i - 1) * np + (j - 1)];
  auto corner = [&](int i, int j) { return P[static_cast<size_t>(i) * np + j]; };
  auto mean4 = [&](int i, int j) {
    return 0.25 * (corner(i - 1, j - 1) + corner(i, j - 1) + corner(i - 1, j) + corner(i, j));
  };

  double vol = 0, tau_sum = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      double m4 = mean4(i, j);
      vol += h * h * m4;
      tau_sum += cb.at(i - 1, j - 1) * m4;
    }

  double int_delta = 0, int_omega = 0;
  for (int i = 1; i <= n; ++i) {
    int_delta += h / 6.0 *
                 (2 * corner(i - 1, i - 1) + corner(i, i - 1) + corner(i - 1, i) +
                  2 * corner(i, i));
    int j = n + 1 - i;
    int_omega += h / 6.0 *
                 (corner(i - 1, j - 1) + 2 * corner(i, j - 1) + 2 * corner(i - 1, j) +
                  corner(i, j));
  }

  double xi_sum = 0;
  for (int i = 0; i < n; ++i) {
    double below = 0;
    for (int j = 0; j < n; ++j) {
      double A = n * below, B = n * cb.at(i, j);
      xi_sum += h * h * (A * A + A * B + B * B / 3.0);
      below += cb.at(i, j);
    }
  }

  auto est = [](double v) { return MeasureValue{Scalar::from_double(v), false}; };
  MeasureVector out;
  out.rho = est(12.0 * vol - 3.0);
  out.tau = est(4.0 * tau_sum - 1.0);
  out.phi = est(6.0 * int_delta - 2.0);
  out.gamma = est(4.0 * int_delta + 4.0 * int_omega - 2.0);
  out.beta = est(4.0 * cb.cdf(0.5, 0.5) - 1.0);
  out.xi = est(6.0 * xi_sum - 2.0);
  return out;
}

// --------------------------- Monte Carlo ----------------------------------

namespace {

// Ranks 1..n with deterministic tie-breaking by index.
std::vector<int> ranks_of(const std::vector<double>& x) {
  const size_t n = x.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (x[a] != x[b]) return x[a] < x[b];
    return a < b;
  });
  std::vector<int> rank(n);
  for (size_t k = 0; k < n; ++k) rank[order[k]] = static_cast<int>(k) + 1;
  return rank;
}

long long merge_count(std::vector<int>& a, std::vector<int>& buf, size_t lo, size_t hi) {
  if (hi - lo < 2) return 0;
  size_t mid = (lo + hi) / 2;
  long long inv = merge_count(a, buf, lo, mid) + merge_count(a, buf, mid, hi);
  size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (a[i] <= a[j])
      buf[k++] = a[i++];
    else {
      inv += static_cast<long long>(mid - i);
      buf[k++] = a[j++];
    }
  }
  while (i < mid) buf[k++] = a[i++];
  while (j < hi) buf[k++] = a[j++];
  std::copy(buf.begin() + lo, buf.begin() + hi, a.begin() + lo);
  return inv;
}

struct RankStats {
  double rho, tau, phi, gamma, beta, xi;
};

RankStats rank_stats(const std::vector<std::pair<double, double>>& pts) {
  const size_t n = pts.size();
  std::vector<double> us(n), vs(n);
  for (size_t i = 0; i < n; ++i) {
    us[i] = pts[i].first;
    vs[i] = pts[i].second;
  }
  std::vector<int> R = ranks_of(us), S = ranks_of(vs);
  const double dn = static_cast<double>(n);

  double d2 = 0, dabs = 0, gini = 0;
  long long half_hits = 0;
  for (size_t i = 0; i < n; ++i) {
    double d = R[i] - S[i];
    d2 += d * d;
    dabs += std::abs(d);
    gini += std::abs(R[i] + S[i] - dn - 1) - std::abs(d);
    if (R[i] <= n / 2 && S[i] <= n / 2) ++half_hits;
  }

  // S in the order of increasing u, for tau (inversions) and xi (adjacent
  // rank moves).
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return R[a] < R[b]; });
  std::vector<int> s_sorted(n);
  for (size_t k = 0; k < n; ++k) s_sorted[k] = S[order[k]];
  double xi_moves = 0;
  for (size_t k = 0; k + 1 < n; ++k)
    xi_moves += std::abs(s_sorted[k + 1] - s_sorted[k]);
  std::vector<int> work = s_sorted, buf(n);
  long long inv = merge_count(work, buf, 0, n);

  RankStats st;
  st.rho = 1.0 - 6.0 * d2 / (dn * (dn * dn - 1.0));
  st.tau = 1.0 - 4.0 * static_cast<double>(inv) / (dn * (dn - 1.0));
  st.phi = 1.0 - 3.0 * dabs / (dn * dn - 1.0);
  st.gamma = gini / std::floor(dn * dn / 2.0);
  st.beta = 4.0 * static_cast<double>(half_hits) / dn - 1.0;
  st.xi = 1.0 - 3.0 * xi_moves / (dn * dn - 1.0);
  return st;
}

}  // namespace

McMeasures mc_measures(const CopulaExpr& e, long long samples, std::uint64_t seed) {
  if (samples < 100) throw ArgumentError("mc_measures needs at least 100 samples");
  auto pts = sample(e, seed, samples);
  RankStats full = rank_stats(pts);

  constexpr int kBatches = 10;
  const long long per = samples / kBatches;
  std::vector<RankStats> batch;
  for (int b = 0; b < kBatches; ++b) {
    auto first = pts.begin() + b * per;
    auto last = (b == kBatches - 1) ? pts.end() : first + per;
    batch.push_back(rank_stats(std::vector<std::pair<double, double>>(first, last)));
  }

  auto make = [&](double value, auto member) {
    double mean = 0;
    for (const RankStats& st : batch) mean += st.*member;
    mean /= kBatches;
    double var = 0;
    for (const RankStats& st : batch) {
      double d = st.*member - mean;
      var += d * d;
    }
    var /= (kBatches - 1);
    McEstimate out;
    out.value = value;
    out.stderr_ = std::sqrt(var / kBatches);
    out.samples = samples;
    out.seed = seed;
    return out;
  };

  McMeasures out;
  out.rho = make(full.rho, &RankStats::rho);
  out.tau = make(full.tau, &RankStats::tau);
  out.phi = make(full.phi, &RankStats::phi);
  out.gamma = make(full.gamma, &RankStats::gamma);
  out.beta = make(full.beta, &RankStats::beta);
  out.xi = make(full.xi, &RankStats::xi);
  return out;
}

}  // namespace concordia
