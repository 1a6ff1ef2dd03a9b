#include "concordia/expr.hpp"

#include "concordia/errors.hpp"

#include <algorithm>
#include <cmath>

namespace concordia {

namespace {
const Scalar kZero(0), kOne(1);
}

ExprPtr CopulaExpr::m() { return ExprPtr(new CopulaExpr(Kind::M)); }
ExprPtr CopulaExpr::w() { return ExprPtr(new CopulaExpr(Kind::W)); }
ExprPtr CopulaExpr::pi() { return ExprPtr(new CopulaExpr(Kind::Pi)); }

ExprPtr CopulaExpr::shuffle(ShuffleOfM s) {
  auto e = new CopulaExpr(Kind::Shuffle);
  e->shuffle_ = std::make_shared<ShuffleOfM>(std::move(s));
  return ExprPtr(e);
}

ExprPtr CopulaExpr::ordinal(std::vector<OrdinalBlock> blocks) {
  if (blocks.empty()) throw ValidationError("ordinal sum needs at least one block");
  for (const OrdinalBlock& b : blocks) {
    if (!b.summand) throw ValidationError("ordinal block without summand");
    if (!(Scalar(0) <= b.a && b.a < b.b && b.b <= Scalar(1)))
      throw ValidationError("ordinal block needs 0 <= a < b <= 1");
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const OrdinalBlock& x, const OrdinalBlock& y) { return x.a < y.a; });
  for (size_t i = 0; i + 1 < blocks.size(); ++i)
    if (blocks[i + 1].a < blocks[i].b)
      throw ValidationError("ordinal blocks overlap");
  auto e = new CopulaExpr(Kind::Ordinal);
  e->blocks_ = std::move(blocks);
  return ExprPtr(e);
}

ExprPtr CopulaExpr::reflect(int axis, ExprPtr of) {
  if (axis != 1 && axis != 2) throw ValidationError("reflection axis must be 1 or 2");
  if (!of) throw ValidationError("reflection of nothing");
  auto e = new CopulaExpr(Kind::Reflect);
  e->axis_ = axis;
  e->of_ = std::move(of);
  return ExprPtr(e);
}

ExprPtr CopulaExpr::convex(std::vector<ConvexPart> parts) {
  if (parts.empty()) throw ValidationError("convex combination needs at least one part");
  Scalar sum(0);
  bool all_rational = true;
  for (const ConvexPart& p : parts) {
    if (!p.part) throw ValidationError("convex part without expression");
    if (p.weight < kZero) throw ValidationError("convex weights must be nonnegative");
    all_rational = all_rational && p.weight.is_rational();
    sum += p.weight;
  }
  if (all_rational ? (sum != kOne) : (std::abs(sum.to_double() - 1.0) > 1e-12))
    throw ValidationError("convex weights must sum to 1");
  auto e = new CopulaExpr(Kind::Convex);
  e->parts_ = std::move(parts);
  return ExprPtr(e);
}

const ShuffleOfM& CopulaExpr::shuffle_data() const {
  if (kind_ != Kind::Shuffle) throw ArgumentError("not a shuffle node");
  return *shuffle_;
}
const std::vector<OrdinalBlock>& CopulaExpr::blocks() const {
  if (kind_ != Kind::Ordinal) throw ArgumentError("not an ordinal node");
  return blocks_;
}
int CopulaExpr::reflect_axis() const {
  if (kind_ != Kind::Reflect) throw ArgumentError("not a reflection node");
  return axis_;
}
const ExprPtr& CopulaExpr::reflect_of() const {
  if (kind_ != Kind::Reflect) throw ArgumentError("not a reflection node");
  return of_;
}
const std::vector<ConvexPart>& CopulaExpr::parts() const {
  if (kind_ != Kind::Convex) throw ArgumentError("not a convex node");
  return parts_;
}

bool CopulaExpr::is_rational() const {
  switch (kind_) {
    case Kind::M:
    case Kind::W:
    case Kind::Pi:
      return true;
    case Kind::Shuffle:
      return shuffle_->is_rational();
    case Kind::Ordinal:
      for (const OrdinalBlock& b : blocks_)
        if (!b.a.is_rational() || !b.b.is_rational() || !b.summand->is_rational())
          return false;
      return true;
    case Kind::Reflect:
      return of_->is_rational();
    case Kind::Convex:
      for (const ConvexPart& p : parts_)
        if (!p.weight.is_rational() || !p.part->is_rational()) return false;
      return true;
  }
  return false;
}

Scalar eval(const CopulaExpr& e, const Scalar& u, const Scalar& v) {
  if (u < kZero || u > kOne || v < kZero || v > kOne)
    throw ArgumentError("eval expects (u,v) in the unit square");
  switch (e.kind()) {
    case CopulaExpr::Kind::M:
      return min(u, v);
    case CopulaExpr::Kind::W:
      return max(kZero, u + v - kOne);
    case CopulaExpr::Kind::Pi:
      return u * v;
    case CopulaExpr::Kind::Shuffle:
      return e.shuffle_data().cdf(u, v);
    case CopulaExpr::Kind::Ordinal: {
      for (const OrdinalBlock& b : e.blocks()) {
        if (u >= b.a && u <= b.b && v >= b.a && v <= b.b) {
          Scalar w = b.b - b.a;
          return b.a + w * eval(*b.summand, (u - b.a) / w, (v - b.a) / w);
        }
      }
      return min(u, v);
    }
    case CopulaExpr::Kind::Reflect: {
      const CopulaExpr& inner = *e.reflect_of();
      if (e.reflect_axis() == 1) return v - eval(inner, kOne - u, v);
      return u - eval(inner, u, kOne - v);
    }
    case CopulaExpr::Kind::Convex: {
      Scalar acc(0);
      for (const ConvexPart& p : e.parts()) acc += p.weight * eval(*p.part, u, v);
      return acc;
    }
  }
  throw ArgumentError("unreachable expression kind");
}

double eval(const CopulaExpr& e, double u, double v) {
  switch (e.kind()) {
    case CopulaExpr::Kind::M:
      return std::min(u, v);
    case CopulaExpr::Kind::W:
      return std::max(0.0, u + v - 1.0);
    case CopulaExpr::Kind::Pi:
      return u * v;
    case CopulaExpr::Kind::Shuffle:
      return e.shuffle_data().cdf(u, v);
    case CopulaExpr::Kind::Ordinal: {
      for (const OrdinalBlock& b : e.blocks()) {
        double a = b.a.to_double(), bb = b.b.to_double();
        if (u >= a && u <= bb && v >= a && v <= bb) {
          double w = bb - a;
          return a + w * eval(*b.summand, (u - a) / w, (v - a) / w);
        }
      }
      return std::min(u, v);
    }
    case CopulaExpr::Kind::Reflect: {
      const CopulaExpr& inner = *e.reflect_of();
      if (e.reflect_axis() == 1) return v - eval(inner, 1.0 - u, v);
      return u - eval(inner, u, 1.0 - v);
    }
    case CopulaExpr::Kind::Convex: {
      double acc = 0;
      for (const ConvexPart& p : e.parts())
        acc += p.weight.to_double() * eval(*p.part, u, v);
      return acc;
    }
  }
  return 0;
}

Scalar rect_volume(const CopulaExpr& e, const Scalar& u1, const Scalar& u2,
                   const Scalar& v1, const Scalar& v2) {
  if (u2 < u1 || v2 < v1) throw ArgumentError("inverted rectangle");
  return eval(e, u2, v2) - eval(e, u2, v1) - eval(e, u1, v2) + eval(e, u1, v1);
}

double rect_volume(const CopulaExpr& e, double u1, double u2, double v1, double v2) {
  if (u2 < u1 || v2 < v1) throw ArgumentError("inverted rectangle");
  return eval(e, u2, v2) - eval(e, u2, v1) - eval(e, u1, v2) + eval(e, u1, v1);
}

namespace {

// Ordinal sums of graph-supported copulas are graph-supported: identity
// outside the blocks, rescaled summand graphs inside.
std::vector<Segment> ordinal_segments(const std::vector<OrdinalBlock>& blocks) {
  std::vector<Segment> segs;
  Scalar cursor = kZero;
  for (const OrdinalBlock& b : blocks) {
    if (b.a > cursor) segs.push_back({cursor, b.a, cursor, b.a, 1});
    Scalar w = b.b - b.a;
    ShuffleOfM inner = as_shuffle(*b.summand);
    for (const Segment& s : inner.support())
      segs.push_back({b.a + w * s.x0, b.a + w * s.x1, b.a + w * s.y0, b.a + w * s.y1, s.flip});
    cursor = b.b;
  }
  if (cursor < kOne) segs.push_back({cursor, kOne, cursor, kOne, 1});
  return segs;
}

}  // namespace

ShuffleOfM as_shuffle(const CopulaExpr& e) {
  switch (e.kind()) {
    case CopulaExpr::Kind::M:
      return ShuffleOfM::identity();
    case CopulaExpr::Kind::W:
      return ShuffleOfM::antidiagonal();
    case CopulaExpr::Kind::Pi:
      throw NotAShuffle("the independence copula carries no graph");
    case CopulaExpr::Kind::Shuffle:
      return e.shuffle_data().normalized();
    case CopulaExpr::Kind::Ordinal:
      return ShuffleOfM::from_segments(ordinal_segments(e.blocks()), true);
    case CopulaExpr::Kind::Reflect:
      return ShuffleOfM::from_segments(
          as_shuffle(*e.reflect_of()).reflected(e.reflect_axis()).support(), true);
    case CopulaExpr::Kind::Convex:
      throw NotAShuffle("convex combinations have no shuffle normal form");
  }
  throw NotAShuffle("unreachable expression kind");
}

bool shuffle_normalizable(const CopulaExpr& e) {
  switch (e.kind()) {
    case CopulaExpr::Kind::M:
    case CopulaExpr::Kind::W:
    case CopulaExpr::Kind::Shuffle:
      return true;
    case CopulaExpr::Kind::Pi:
    case CopulaExpr::Kind::Convex:
      return false;
    case CopulaExpr::Kind::Ordinal:
      for (const OrdinalBlock& b : e.blocks())
        if (!shuffle_normalizable(*b.summand)) return false;
      return true;
    case CopulaExpr::Kind::Reflect:
      return shuffle_normalizable(*e.reflect_of());
  }
  return false;
}

}  // namespace concordia
