#include "concordia/synthesis.hpp"

#include "concordia/errors.hpp"
#include "concordia/section.hpp"

#include <algorithm>
#include <cmath>

namespace concordia {

namespace {

const Scalar kZero(0), kOne(1), kHalf = frac(1, 2), kQuarter = frac(1, 4);

void require_range(const Scalar& v, const Scalar& lo, const Scalar& hi,
                   const std::string& what) {
  if (v < lo || v > hi) throw ArgumentError(what + " out of range");
}

std::vector<int> all_plus(int n) { return std::vector<int>(n, 1); }

}  // namespace

ExprPtr shuffle_cb(const Scalar& b) {
  require_range(b, kZero, kQuarter, "shuffle_cb parameter b");
  std::vector<Scalar> splits{b, kHalf - b, kHalf, kHalf + b, kOne - b};
  return CopulaExpr::shuffle(ShuffleOfM(splits, {3, 5, 1, 6, 2, 4}, all_plus(6)));
}

ExprPtr shuffle_db(const Scalar& b) {
  require_range(b, kZero, kHalf, "shuffle_db parameter b");
  return CopulaExpr::shuffle(ShuffleOfM({b, kOne - b}, {1, 2, 3}, {-1, 1, -1}));
}

ExprPtr shuffle_gb(const Scalar& b) {
  require_range(b, kZero, kQuarter, "shuffle_gb parameter b");
  std::vector<Scalar> splits{b, kHalf - b, kHalf, kHalf + b, kOne - b};
  return CopulaExpr::shuffle(ShuffleOfM(splits, {3, 2, 1, 6, 5, 4}, {1, -1, 1, 1, -1, 1}));
}

ExprPtr shuffle_lab(const Scalar& a, const Scalar& b) {
  require_range(b, kZero, kQuarter, "shuffle_lab parameter b");
  require_range(a, kZero, b, "shuffle_lab parameter a");
  std::vector<Scalar> splits{a,         b,         kHalf - b, kHalf - b + a, kHalf,
                             kHalf + b - a, kHalf + b, kOne - b,  kOne - a};
  return CopulaExpr::shuffle(ShuffleOfM(splits, {7, 5, 8, 10, 2, 9, 1, 3, 6, 4},
                                        {-1, 1, 1, -1, 1, 1, -1, 1, 1, -1}));
}

ExprPtr nest_middle(const Scalar& a, ExprPtr summand) {
  require_range(a, kZero, kHalf, "nest_middle parameter a");
  if (a == kHalf) return CopulaExpr::m();
  if (a == kZero) return summand;
  return CopulaExpr::ordinal({OrdinalBlock{a, kOne - a, std::move(summand)}});
}

ExprPtr make_family(FamilyId id, const std::vector<Scalar>& params, ExprPtr summand) {
  auto p = [&](size_t i) -> const Scalar& {
    if (i >= params.size()) throw ArgumentError("missing family parameter");
    return params[i];
  };
  switch (id) {
    case FamilyId::Cb:
      return shuffle_cb(p(0));
    case FamilyId::Db:
      return shuffle_db(p(0));
    case FamilyId::Gb:
      return shuffle_gb(p(0));
    case FamilyId::Lab:
      return shuffle_lab(p(0), p(1));
    case FamilyId::Aab:
      return nest_middle(p(0), shuffle_cb(p(1)));
    case FamilyId::Fab:
      return CopulaExpr::reflect(
          2, nest_middle(p(0), CopulaExpr::reflect(2, shuffle_db(p(1)))));
    case FamilyId::Hab:
      return nest_middle(p(0), shuffle_gb(p(1)));
    case FamilyId::Kab:
      return CopulaExpr::reflect(2, nest_middle(p(0), shuffle_gb(p(1))));
    case FamilyId::Mab:
      return CopulaExpr::reflect(2, shuffle_lab(p(0), p(1)));
    case FamilyId::NestMiddle:
      if (!summand) throw ArgumentError("NestMiddle needs a summand");
      return nest_middle(p(0), std::move(summand));
  }
  throw ArgumentError("unknown family");
}

namespace {

Scalar face_tol(const RegionPoint& t) {
  return t.is_rational() ? Scalar(0) : Scalar::from_double(1e-9);
}

// Clamps float noise into [lo, hi]; drifting beyond 1e-12 means the caller
// inverted something wrong, which is a bug, not an input problem.
Scalar snap(const Scalar& v, const Scalar& lo, const Scalar& hi, const char* what) {
  if (v < lo) {
    if ((lo - v).to_double() > 1e-12)
      throw NumericError(std::string(what) + " fell below its domain");
    return lo;
  }
  if (v > hi) {
    if ((v - hi).to_double() > 1e-12)
      throw NumericError(std::string(what) + " rose above its domain");
    return hi;
  }
  return v;
}

struct FaceBuild {
  ExprPtr expr;
  RegionPoint closed_form;  // family formulas at the inverted parameters
  std::string recipe;
};

std::string param_str(const Scalar& a, const Scalar& b) {
  return "(a=" + a.str() + ",b=" + b.str() + ")";
}

// Shared (s, q) -> (a, b) extraction; s = (1-2a)^2, q = s b^2.
std::pair<Scalar, Scalar> extract_ab(const Scalar& s, const Scalar& q,
                                     const Scalar& bcap) {
  if (s == kZero) return {kHalf, kZero};
  Scalar a = snap((kOne - sqrt(s)) / Scalar(2), kZero, kHalf, "nest parameter a");
  Scalar b = snap(sqrt(q / s), kZero, bcap, "family parameter b");
  return {a, b};
}

FaceBuild build_f6(const RegionPoint& t) {
  Scalar q = snap((t.gamma - t.phi) / Scalar(4), kZero, frac(1, 16), "q");
  Scalar s = snap((Scalar(6) * t.gamma - Scalar(8) * t.phi + Scalar(2)) / Scalar(3),
                  max(Scalar(16) * q, kZero), kOne, "s");
  auto [a, b] = extract_ab(s, q, kQuarter);
  Scalar three_half = frac(3, 2);
  return {nest_middle(a, shuffle_cb(b)),
          {Scalar(12) * q + kOne - three_half * s,
           Scalar(16) * q + kOne - three_half * s, Scalar(8) * q + kOne - s},
          "F6:A" + param_str(a, b)};
}

FaceBuild build_f7(const RegionPoint& t) {
  Scalar s = snap(frac(4, 3) * (kOne - t.phi), kZero, kOne, "s");
  Scalar q = snap((t.tau - kOne + s) / Scalar(8), kZero, s / Scalar(16), "q");
  auto [a, b] = extract_ab(s, q, kQuarter);
  return {nest_middle(a, shuffle_gb(b)),
          {kOne - frac(3, 4) * s, kOne - s / Scalar(2), Scalar(8) * q + kOne - s},
          "F7:H" + param_str(a, b)};
}

FaceBuild build_f4(const RegionPoint& t) {
  Scalar q = snap((Scalar(3) * t.gamma + kOne - Scalar(4) * t.phi) / Scalar(6), kZero,
                  frac(1, 4), "q");
  Scalar s = snap((t.gamma + kOne) / Scalar(2) + q, max(Scalar(4) * q, kZero), kOne, "s");
  auto [a, b] = extract_ab(s, q, kHalf);
  ExprPtr expr = (s == kZero)
                     ? CopulaExpr::w()
                     : CopulaExpr::reflect(2, nest_middle(a, CopulaExpr::reflect(
                                                                  2, shuffle_db(b))));
  return {expr,
          {Scalar(-3) * q + (Scalar(3) * s - kOne) / Scalar(2),
           Scalar(-2) * q + Scalar(2) * s - kOne, Scalar(-4) * q + Scalar(2) * s - kOne},
          "F4:F" + param_str(a, b)};
}

// Triangle P2P3P6 of the quadrilateral face, reached by the ten-piece
// family directly.
FaceBuild build_f5_lower(const RegionPoint& t) {
  Scalar r = snap((Scalar(2) * t.phi + kOne) / Scalar(24), kZero, frac(1, 16), "r");
  Scalar b2 = snap((t.gamma + kHalf - t.tau) / Scalar(8), r, frac(1, 16), "b^2");
  Scalar b = snap(sqrt(b2), kZero, kQuarter, "b");
  Scalar a = snap(b - sqrt(r), kZero, b, "a");
  Scalar sixteen_r = Scalar(16) * r;
  return {shuffle_lab(a, b),
          {Scalar(12) * r - kHalf, sixteen_r - kHalf, sixteen_r - Scalar(8) * b2},
          "F5:L" + param_str(a, b)};
}

FaceBuild reflected_build(FaceBuild inner, const std::string& face) {
  RegionPoint cf = involution_A(inner.closed_form);
  return {CopulaExpr::reflect(2, inner.expr), cf,
          face + ":sigma2(" + inner.recipe + ")"};
}

FaceBuild build_face(const std::string& face, const RegionPoint& t) {
  if (face == "F6") return build_f6(t);
  if (face == "F7") return build_f7(t);
  if (face == "F4") return build_f4(t);
  if (face == "F5") {
    // The diagonal P2P6 splits the quadrilateral; tau >= gamma picks the
    // triangle P2P3P6 covered by the L family, the mirror covers the rest.
    Scalar side = Scalar(6) * t.tau - Scalar(8) * t.phi;
    if (side >= kOne) return build_f5_lower(t);
    return reflected_build(build_f5_lower(involution_A(t)), "F5");
  }
  if (face == "F2") return reflected_build(build_f6(involution_A(t)), "F2");
  if (face == "F3") return reflected_build(build_f4(involution_A(t)), "F3");
  if (face == "F1") return reflected_build(build_f7(involution_A(t)), "F1");
  throw ArgumentError("unknown face " + face);
}

Scalar triple_residual(const RegionPoint& got, const RegionPoint& want) {
  return max(abs(got.phi - want.phi),
             max(abs(got.gamma - want.gamma), abs(got.tau - want.tau)));
}

}  // namespace

SynthesisResult attain_face(const std::string& face, const RegionPoint& target) {
  Scalar tol = face_tol(target);
  Classification cls = classify(target, tol);  // throws OutOfRegion if outside
  if (std::find(cls.faces.begin(), cls.faces.end(), face) == cls.faces.end())
    throw OutOfFace("target is not on face " + face);
  FaceBuild built = build_face(face, target);
  SynthesisResult out;
  out.expr = built.expr;
  out.target = target;
  out.residual = triple_residual(built.closed_form, target);
  out.recipe = built.recipe;
  out.achieved = all_measures(*built.expr, 256);
  return out;
}

SynthesisResult attain(const RegionPoint& target) {
  Scalar tol = face_tol(target);
  ContainsResult inside = contains(target, tol);
  if (inside.location == Location::Outside) {
    std::string msg = "target outside the region; violated:";
    for (const std::string& f : inside.violated) msg += " " + f;
    throw OutOfRegion(msg);
  }

  auto [tau_lo, tau_hi] = tau_bounds(target.phi, target.gamma, tol);
  const std::string lower_face = Scalar(2) * target.phi >= target.gamma ? "F4" : "F2";
  const std::string upper_face = target.phi <= target.gamma ? "F6" : "F3";
  const Scalar eps = target.is_rational() ? Scalar(0) : Scalar::from_double(1e-12);

  auto endpoint = [&](const std::string& face, const Scalar& tau_val) {
    RegionPoint t{target.phi, target.gamma, tau_val};
    FaceBuild built = build_face(face, t);
    SynthesisResult out;
    out.expr = built.expr;
    out.target = target;
    out.residual = triple_residual(built.closed_form, target);
    out.recipe = built.recipe;
    out.achieved = all_measures(*built.expr, 256);
    return out;
  };

  if (abs(target.tau - tau_lo) <= eps) return endpoint(lower_face, tau_lo);
  if (abs(target.tau - tau_hi) <= eps) return endpoint(upper_face, tau_hi);

  RegionPoint t0{target.phi, target.gamma, tau_lo};
  RegionPoint t1{target.phi, target.gamma, tau_hi};
  FaceBuild c0 = build_face(lower_face, t0);
  FaceBuild c1 = build_face(upper_face, t1);

  // tau(t C1 + (1-t) C0) = t^2 tau1 + (1-t)^2 tau0 + 2t(1-t) Q(C0,C1).
  Scalar q01 = concordance_q(*c0.expr, *c1.expr);
  Scalar alpha = tau_hi + tau_lo - Scalar(2) * q01;
  Scalar beta_c = Scalar(2) * (q01 - tau_lo);
  Scalar gamma_c = tau_lo - target.tau;

  auto poly = [&](const Scalar& t) { return (alpha * t + beta_c) * t + gamma_c; };

  Scalar t_mix;
  bool found = false;
  if (alpha == kZero) {
    if (beta_c != kZero) {
      t_mix = -gamma_c / beta_c;
      found = t_mix >= kZero && t_mix <= kOne;
    }
  } else {
    Scalar disc = beta_c * beta_c - Scalar(4) * alpha * gamma_c;
    if (disc >= kZero) {
      // stable form: q = -(beta + sign(beta) sqrt(disc)) / 2, roots q/alpha
      // and gamma/q; a near-vanishing leading coefficient then degrades to
      // the linear root instead of a cancellation artifact
      Scalar root = sqrt(disc);
      Scalar qq = (beta_c < kZero) ? (root - beta_c) / Scalar(2) : -(beta_c + root) / Scalar(2);
      std::vector<Scalar> candidates;
      if (qq != kZero) {
        candidates.push_back(qq / alpha);
        candidates.push_back(gamma_c / qq);
      } else {
        candidates.push_back(Scalar(0));
      }
      for (Scalar cand : candidates) {
        if (cand >= -Scalar::from_double(1e-12) && cand <= kOne + Scalar::from_double(1e-12)) {
          cand = snap(cand, kZero, kOne, "mixing weight");
          if (!found || cand < t_mix) {
            t_mix = cand;
            found = true;
          }
        }
      }
    }
  }
  if (found && abs(poly(t_mix)).to_double() > 1e-9) found = false;
  if (!found) {
    // The polynomial changes sign on [0,1]; bisect as a last resort.
    double lo = 0.0, hi = 1.0;
    double flo = poly(Scalar::from_double(lo)).to_double();
    double fhi = poly(Scalar::from_double(hi)).to_double();
    if (flo > 1e-9 || fhi < -1e-9)
      throw NumericError("mixing weight root missing (internal inconsistency)");
    for (int it = 0; it < 200; ++it) {
      double mid = 0.5 * (lo + hi);
      double fm = poly(Scalar::from_double(mid)).to_double();
      if ((fm <= 0) == (flo <= 0))
        lo = mid;
      else
        hi = mid;
    }
    t_mix = Scalar::from_double(0.5 * (lo + hi));
  }

  ExprPtr expr = CopulaExpr::convex(
      {ConvexPart{kOne - t_mix, c0.expr}, ConvexPart{t_mix, c1.expr}});

  SynthesisResult out;
  out.expr = expr;
  out.target = target;
  out.recipe = c1.recipe + " \xE2\x8A\x95 t=" + t_mix.str() + " \xE2\x8A\x97 " + c0.recipe;
  out.residual = max(max(triple_residual(c0.closed_form, t0),
                         triple_residual(c1.closed_form, t1)),
                     abs(poly(t_mix)));
  out.achieved = all_measures(*expr, 256);
  return out;
}

}  // namespace concordia
