#include "concordia/shuffle.hpp"

#include "concordia/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace concordia {

namespace {

const Scalar kZero(0), kOne(1);

// Exact for rational pairs, 1e-12 otherwise; float segment chains are built
// from identical subexpressions so the tolerance only absorbs rounding.
bool near_equal(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return a == b;
  return std::abs(a.to_double() - b.to_double()) <= 1e-12;
}

}  // namespace

ShuffleOfM::ShuffleOfM(std::vector<Scalar> splits, std::vector<int> perm,
                       std::vector<int> flips)
    : splits_(std::move(splits)), perm_(std::move(perm)), flips_(std::move(flips)) {
  const int n = static_cast<int>(perm_.size());
  if (n == 0) throw ValidationError("shuffle needs at least one piece");
  if (static_cast<int>(splits_.size()) != n - 1)
    throw ValidationError("shuffle expects " + std::to_string(n - 1) + " interior splits");
  if (static_cast<int>(flips_.size()) != n)
    throw ValidationError("shuffle expects one flip per piece");

  Scalar prev = kZero;
  for (const Scalar& s : splits_) {
    if (s < prev || s > kOne)
      throw ValidationError("shuffle splits must be nondecreasing within [0,1]");
    prev = s;
  }
  std::vector<bool> seen(n, false);
  for (int p : perm_) {
    if (p < 1 || p > n || seen[p - 1])
      throw ValidationError("shuffle perm must be a bijection of 1..n");
    seen[p - 1] = true;
  }
  for (int f : flips_)
    if (f != 1 && f != -1) throw ValidationError("shuffle flips must be +1 or -1");

  finish_from_raw();
}

void ShuffleOfM::finish_from_raw() {
  const int n = static_cast<int>(perm_.size());
  auto cut = [&](int i) -> Scalar {  // u_0..u_n
    if (i == 0) return kZero;
    if (i == n) return kOne;
    return splits_[i - 1];
  };
  // Band j inherits the width of the piece mapped onto it.
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm_[i] - 1] = i;
  images_.assign(1, kZero);
  for (int j = 1; j <= n; ++j) {
    int i = inv[j - 1];
    images_.push_back(images_.back() + cut(i + 1) - cut(i));
  }

  support_.clear();
  for (int i = 0; i < n; ++i) {
    Segment seg{cut(i), cut(i + 1), images_[perm_[i] - 1], images_[perm_[i]], flips_[i]};
    if (seg.x1 > seg.x0) support_.push_back(seg);
  }
  dsupport_.clear();
  dsupport_.reserve(support_.size());
  for (const Segment& s : support_)
    dsupport_.push_back({s.x0.to_double(), s.x1.to_double(), s.y0.to_double(),
                         s.y1.to_double(), s.flip});
}

ShuffleOfM ShuffleOfM::identity() { return ShuffleOfM({}, {1}, {1}); }

ShuffleOfM ShuffleOfM::antidiagonal() { return ShuffleOfM({}, {1}, {-1}); }

std::vector<Segment> ShuffleOfM::raw_segments() const {
  const int n = static_cast<int>(perm_.size());
  auto cut = [&](int i) -> Scalar {
    if (i == 0) return kZero;
    if (i == n) return kOne;
    return splits_[i - 1];
  };
  std::vector<Segment> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i)
    out.push_back({cut(i), cut(i + 1), images_[perm_[i] - 1], images_[perm_[i]], flips_[i]});
  return out;
}

ShuffleOfM ShuffleOfM::from_segments(std::vector<Segment> segments, bool merge) {
  std::erase_if(segments, [](const Segment& s) { return !(s.x1 > s.x0); });
  if (segments.empty()) throw ValidationError("segment list covers nothing");
  std::sort(segments.begin(), segments.end(),
            [](const Segment& a, const Segment& b) { return a.x0 < b.x0; });

  // Domain must tile [0,1]; each band must be as wide as its piece.
  if (!near_equal(segments.front().x0, kZero) || !near_equal(segments.back().x1, kOne))
    throw ValidationError("segments do not cover [0,1]");
  for (size_t i = 0; i < segments.size(); ++i) {
    if (!near_equal(segments[i].x1 - segments[i].x0, segments[i].y1 - segments[i].y0))
      throw ValidationError("segment band width differs from piece width");
    if (i + 1 < segments.size() && !near_equal(segments[i].x1, segments[i + 1].x0))
      throw ValidationError("segments leave a gap in the domain");
  }

  if (merge) {
    std::vector<Segment> merged;
    for (const Segment& s : segments) {
      if (!merged.empty()) {
        Segment& m = merged.back();
        bool joins = m.flip == s.flip &&
                     (m.flip == 1 ? near_equal(m.y1, s.y0) : near_equal(m.y0, s.y1));
        if (joins) {
          m.x1 = s.x1;
          if (m.flip == 1)
            m.y1 = s.y1;
          else
            m.y0 = s.y0;
          continue;
        }
      }
      merged.push_back(s);
    }
    segments = std::move(merged);
  }

  // Bands sorted by start tile [0,1] as well; their rank gives the perm.
  std::vector<int> order(segments.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return segments[a].y0 < segments[b].y0; });
  Scalar yprev = kZero;
  for (int idx : order) {
    if (!near_equal(segments[idx].y0, yprev))
      throw ValidationError("segment bands do not tile [0,1]");
    yprev = segments[idx].y1;
  }
  if (!near_equal(yprev, kOne)) throw ValidationError("segment bands do not reach 1");

  ShuffleOfM s;
  s.perm_.resize(segments.size());
  s.flips_.resize(segments.size());
  for (size_t rank = 0; rank < order.size(); ++rank) s.perm_[order[rank]] = static_cast<int>(rank) + 1;
  for (size_t i = 0; i < segments.size(); ++i) s.flips_[i] = segments[i].flip;
  for (size_t i = 0; i + 1 < segments.size(); ++i) s.splits_.push_back(segments[i].x1);
  s.finish_from_raw();
  return s;
}

ShuffleOfM ShuffleOfM::normalized() const { return from_segments(support_, true); }

std::vector<Scalar> ShuffleOfM::domain_breakpoints() const {
  std::vector<Scalar> out{kZero};
  for (const Segment& s : support_) out.push_back(s.x1);
  return out;
}

std::vector<Scalar> ShuffleOfM::image_breakpoints() const {
  std::vector<Scalar> ys;
  for (const Segment& s : support_) ys.push_back(s.y0);
  std::sort(ys.begin(), ys.end());
  ys.push_back(kOne);
  return ys;
}

Scalar ShuffleOfM::h(const Scalar& u) const {
  if (u < kZero || u > kOne) throw ArgumentError("h expects u in [0,1]");
  // Breakpoints map to image breakpoints: h(x_i) = y_i of the support view.
  for (size_t i = 0; i < support_.size(); ++i) {
    const Segment& s = support_[i];
    if (u == s.x0) {
      std::vector<Scalar> ys = image_breakpoints();
      return ys[i];
    }
    if (u < s.x1 || (i + 1 == support_.size() && u == s.x1)) {
      if (u == s.x1) return kOne;  // u == 1 on the closed last piece
      return s.flip == 1 ? s.y0 + (u - s.x0) : s.y1 - (u - s.x0);
    }
  }
  return kOne;
}

Scalar ShuffleOfM::cdf(const Scalar& u, const Scalar& v) const {
  Scalar total = kZero;
  for (const Segment& s : support_) {
    if (s.flip == 1) {
      Scalar upper = min(min(u, s.x1), s.x0 + (v - s.y0));
      if (upper > s.x0) total += upper - s.x0;
    } else {
      Scalar lower = max(s.x0, s.x0 + (s.y1 - v));
      Scalar upper = min(u, s.x1);
      if (upper > lower) total += upper - lower;
    }
  }
  return total;
}

double ShuffleOfM::h(double u) const {
  for (size_t i = 0; i < dsupport_.size(); ++i) {
    const DSeg& s = dsupport_[i];
    if (u < s.x1 || i + 1 == dsupport_.size())
      return s.flip == 1 ? s.y0 + (u - s.x0) : s.y1 - (u - s.x0);
  }
  return 1.0;
}

double ShuffleOfM::cdf(double u, double v) const {
  double total = 0;
  for (const DSeg& s : dsupport_) {
    if (s.flip == 1) {
      double upper = std::min(std::min(u, s.x1), s.x0 + (v - s.y0));
      if (upper > s.x0) total += upper - s.x0;
    } else {
      double lower = std::max(s.x0, s.x0 + (s.y1 - v));
      double upper = std::min(u, s.x1);
      if (upper > lower) total += upper - lower;
    }
  }
  return total;
}

ShuffleOfM ShuffleOfM::reflected(int axis) const {
  if (axis != 1 && axis != 2) throw ArgumentError("reflection axis must be 1 or 2");
  std::vector<Segment> segs;
  segs.reserve(support_.size());
  for (const Segment& s : support_) {
    if (axis == 2) {
      // v -> 1 - v: bands reverse, orientation flips.
      segs.push_back({s.x0, s.x1, kOne - s.y1, kOne - s.y0, -s.flip});
    } else {
      // u -> 1 - u: pieces reverse, orientation flips.
      segs.push_back({kOne - s.x1, kOne - s.x0, s.y0, s.y1, -s.flip});
    }
  }
  return from_segments(std::move(segs), false);
}

bool ShuffleOfM::is_rational() const {
  for (const Scalar& s : splits_)
    if (!s.is_rational()) return false;
  return true;
}

}  // namespace concordia
