#include "concordia/piecewise.hpp"

#include "concordia/errors.hpp"

#include <algorithm>

namespace concordia {

PiecewiseLinear::PiecewiseLinear(std::vector<Scalar> breakpoints,
                                 std::vector<Scalar> values)
    : x_(std::move(breakpoints)), y_(std::move(values)) {
  if (x_.size() < 2 || x_.size() != y_.size())
    throw ValidationError("piecewise-linear needs matching breakpoints and values");
  if (x_.front() != Scalar(0) || x_.back() != Scalar(1))
    throw ValidationError("piecewise-linear must span [0,1]");
  for (size_t i = 0; i + 1 < x_.size(); ++i)
    if (!(x_[i] < x_[i + 1]))
      throw ValidationError("piecewise-linear breakpoints must strictly increase");
}

Scalar PiecewiseLinear::operator()(const Scalar& x) const {
  if (x < x_.front() || x > x_.back())
    throw ArgumentError("piecewise-linear evaluated outside [0,1]");
  size_t lo = 0, hi = x_.size() - 1;
  while (hi - lo > 1) {
    size_t mid = (lo + hi) / 2;
    if (x_[mid] <= x)
      lo = mid;
    else
      hi = mid;
  }
  if (x == x_[lo]) return y_[lo];
  Scalar t = (x - x_[lo]) / (x_[hi] - x_[lo]);
  return y_[lo] + t * (y_[hi] - y_[lo]);
}

Scalar PiecewiseLinear::integral() const {
  Scalar acc(0);
  for (size_t i = 0; i + 1 < x_.size(); ++i)
    acc += (x_[i + 1] - x_[i]) * (y_[i] + y_[i + 1]) / Scalar(2);
  return acc;
}

PiecewiseLinear PiecewiseLinear::combine(const Scalar& a, const PiecewiseLinear& f,
                                         const Scalar& b, const PiecewiseLinear& g) {
  std::vector<Scalar> xs = f.x_;
  xs.insert(xs.end(), g.x_.begin(), g.x_.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Scalar> ys;
  ys.reserve(xs.size());
  for (const Scalar& x : xs) ys.push_back(a * f(x) + b * g(x));
  return PiecewiseLinear(std::move(xs), std::move(ys));
}

PlanarPath segment_path(const Scalar& x0, const Scalar& y0, const Scalar& x1,
                        const Scalar& y1) {
  return {PathSegment{Scalar(0), Scalar(1), x0, y0, x1, y1}};
}

PlanarPath diagonal_path() { return segment_path(0, 0, 1, 1); }

PlanarPath opposite_diagonal_path() { return segment_path(0, 1, 1, 0); }

}  // namespace concordia
