#pragma once

#include <concordia/expr.hpp>
#include <concordia/piecewise.hpp>
#include <concordia/rng.hpp>
#include <concordia/scalar.hpp>
#include <concordia/shuffle.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace testutil {

using namespace concordia;

// Largest |C1 - C2| over an (n+1) x (n+1) grid, in doubles.
inline double grid_distance(const CopulaExpr& a, const CopulaExpr& b, int n = 100) {
  double worst = 0;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      double u = static_cast<double>(i) / n, v = static_cast<double>(j) / n;
      worst = std::max(worst, std::abs(eval(a, u, v) - eval(b, u, v)));
    }
  return worst;
}

// Random shuffle with rational splits k/denominator.
inline ShuffleOfM random_shuffle(CounterRng& rng, int max_pieces = 6,
                                 long long denominator = 64) {
  int n = 1 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_pieces)));
  std::vector<long long> cuts;
  while (static_cast<int>(cuts.size()) < n - 1) {
    long long c = 1 + static_cast<long long>(rng.next_below(denominator - 1));
    if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
  }
  std::sort(cuts.begin(), cuts.end());
  std::vector<Scalar> splits;
  for (long long c : cuts) splits.push_back(frac(c, denominator));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  for (int i = n - 1; i > 0; --i)
    std::swap(perm[i], perm[rng.next_below(static_cast<std::uint64_t>(i) + 1)]);
  std::vector<int> flips;
  for (int i = 0; i < n; ++i) flips.push_back(rng.next_below(2) ? 1 : -1);
  return ShuffleOfM(std::move(splits), std::move(perm), std::move(flips));
}

// Random expression with every node exactly measurable: leaves are base
// copulas or shuffles, ordinal sums may wrap independence blocks, convex
// combinations only mix graph-supported parts.
inline ExprPtr random_expr(CounterRng& rng, int depth = 2, bool allow_convex = true,
                           bool allow_pi = true) {
  auto leaf = [&]() -> ExprPtr {
    switch (rng.next_below(4)) {
      case 0:
        return CopulaExpr::m();
      case 1:
        return CopulaExpr::w();
      default:
        return CopulaExpr::shuffle(random_shuffle(rng));
    }
  };
  if (depth == 0) return leaf();
  switch (rng.next_below(allow_convex ? 4u : 3u)) {
    case 0:
      return leaf();
    case 1: {  // ordinal sum over 1-3 disjoint blocks on a 1/16 lattice
      int nblocks = 1 + static_cast<int>(rng.next_below(3));
      std::vector<long long> cuts;
      while (static_cast<int>(cuts.size()) < 2 * nblocks) {
        long long c = rng.next_below(17);
        if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
      }
      std::sort(cuts.begin(), cuts.end());
      std::vector<OrdinalBlock> blocks;
      for (int k = 0; k < nblocks; ++k) {
        ExprPtr summand = (allow_pi && rng.next_below(4) == 0)
                              ? CopulaExpr::pi()
                              : random_expr(rng, depth - 1, false, allow_pi);
        blocks.push_back(
            OrdinalBlock{frac(cuts[2 * k], 16), frac(cuts[2 * k + 1], 16), summand});
      }
      return CopulaExpr::ordinal(std::move(blocks));
    }
    case 2:
      return CopulaExpr::reflect(1 + static_cast<int>(rng.next_below(2)),
                                 random_expr(rng, depth - 1, false, allow_pi));
    default: {  // convex mix of graph-supported parts
      int nparts = 2 + static_cast<int>(rng.next_below(2));
      std::vector<ConvexPart> parts;
      long long total = 0;
      std::vector<long long> ws;
      for (int k = 0; k < nparts; ++k) {
        long long w = 1 + static_cast<long long>(rng.next_below(8));
        ws.push_back(w);
        total += w;
      }
      for (int k = 0; k < nparts; ++k)
        parts.push_back(
            ConvexPart{frac(ws[k], total), random_expr(rng, depth - 1, false, false)});
      return CopulaExpr::convex(std::move(parts));
    }
  }
}

// Rectangle mass straight from the support segments: length (in u) of
// {t in [x0,x1] and [u1,u2] : h(t) in [v1,v2]} summed over segments.
// Independent of the cdf evaluation path.
inline double segment_rect_mass(const ShuffleOfM& s, double u1, double u2, double v1,
                                double v2) {
  double total = 0;
  for (const Segment& seg : s.support()) {
    double x0 = seg.x0.to_double(), x1 = seg.x1.to_double();
    double y0 = seg.y0.to_double(), y1 = seg.y1.to_double();
    double lo, hi;  // u-interval where h lands in [v1, v2]
    if (seg.flip == 1) {
      lo = x0 + (v1 - y0);
      hi = x0 + (v2 - y0);
    } else {
      lo = x0 + (y1 - v2);
      hi = x0 + (y1 - v1);
    }
    lo = std::max({lo, x0, u1});
    hi = std::min({hi, x1, u2});
    total += std::max(0.0, hi - lo);
  }
  return total;
}

// Composite trapezoid with 2^16 uniform intervals over one path piece.
inline double dense_line_integral(const ShuffleOfM& s, double x0, double y0, double x1,
                                  double y1, double t0, double t1, int n = 1 << 16) {
  double acc = 0;
  double prev = s.cdf(x0, y0);
  for (int k = 1; k <= n; ++k) {
    double f = static_cast<double>(k) / n;
    double cur = s.cdf(x0 + f * (x1 - x0), y0 + f * (y1 - y0));
    acc += (prev + cur) / 2;
    prev = cur;
  }
  return acc * (t1 - t0) / n;
}

inline double measure_d(const Scalar& s) { return s.to_double(); }

}  // namespace testutil
