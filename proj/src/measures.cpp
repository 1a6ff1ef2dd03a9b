#include "concordia/measures.hpp"

#include "concordia/errors.hpp"
#include "concordia/oracle.hpp"
#include "concordia/section.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace concordia {

namespace {

const Scalar kZero(0), kOne(1), kHalf = frac(1, 2), kTwoThirds = frac(2, 3);

using detail::try_gamma;
using detail::try_phi;
using detail::try_q;
using detail::try_rho;
using detail::try_tau;
using detail::try_xi;

std::optional<MeasureValue> leaf_constant(const CopulaExpr& e, Scalar m_val, Scalar w_val,
                                          Scalar pi_val) {
  switch (e.kind()) {
    case CopulaExpr::Kind::M:
      return MeasureValue{m_val, true};
    case CopulaExpr::Kind::W:
      return MeasureValue{w_val, true};
    case CopulaExpr::Kind::Pi:
      return MeasureValue{pi_val, true};
    default:
      return std::nullopt;
  }
}

// Exact double integral of a shuffle over the unit square. The support
// breakpoints cut the square into cells on which the cdf is affine except
// for the diagonal kink inside support cells; rectangles integrate as
// area * corner mean, kinked cells as two triangles.
Scalar volume_under(const ShuffleOfM& s) {
  std::vector<Scalar> xs = s.domain_breakpoints();
  std::vector<Scalar> ys = s.image_breakpoints();
  const size_t m = xs.size() - 1;

  // support cell (column, row) and orientation
  std::vector<std::pair<size_t, int>> cell_of_column(m);
  for (const Segment& seg : s.support()) {
    size_t col = std::lower_bound(xs.begin(), xs.end(), seg.x0) - xs.begin();
    size_t row = std::lower_bound(ys.begin(), ys.end(), seg.y0) - ys.begin();
    cell_of_column[col] = {row, seg.flip};
  }

  const Scalar third = frac(1, 3), quarter = frac(1, 4);
  Scalar total(0);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < m; ++j) {
      Scalar c00 = s.cdf(xs[i], ys[j]);
      Scalar c10 = s.cdf(xs[i + 1], ys[j]);
      Scalar c01 = s.cdf(xs[i], ys[j + 1]);
      Scalar c11 = s.cdf(xs[i + 1], ys[j + 1]);
      Scalar area = (xs[i + 1] - xs[i]) * (ys[j + 1] - ys[j]);
      if (cell_of_column[i].first == j) {
        Scalar halfarea = area * kHalf;
        if (cell_of_column[i].second == 1)
          total += halfarea * third * (c00 + c10 + c11) + halfarea * third * (c00 + c11 + c01);
        else
          total += halfarea * third * (c00 + c10 + c01) + halfarea * third * (c10 + c11 + c01);
      } else {
        total += area * quarter * (c00 + c10 + c01 + c11);
      }
    }
  }
  return total;
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double fa, double fm, double fb, double whole, double tol,
                        int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0) throw NumericError("quadrature recursion limit reached");
  if (std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1);
}

double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double tol, int depth) {
  if (b <= a) return 0.0;
  double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, depth);
}

// int_{max(0,c)}^{1+min(0,c)} B(t, 1+c-t) dt, exact when B integrates
// exactly along lines, adaptive Simpson at 1e-10 otherwise.
MeasureValue antidiagonal_window(const CopulaExpr& e, const Scalar& c) {
  Scalar lo = max(kZero, c), hi = kOne + min(kZero, c);
  if (!(lo < hi)) return {kZero, true};
  Scalar shift = kOne + c;
  if (e.kind() == CopulaExpr::Kind::Convex) {
    Scalar acc(0);
    bool exact = true;
    for (const ConvexPart& p : e.parts()) {
      MeasureValue part = antidiagonal_window(*p.part, c);
      acc += p.weight * part.value;
      exact = exact && part.exact;
    }
    return {acc, exact};
  }
  PlanarPath path{PathSegment{lo, hi, lo, shift - lo, hi, shift - hi}};
  if (e.kind() == CopulaExpr::Kind::Pi) return {product_integral(path), true};
  if (shuffle_normalizable(e)) return {line_integral(as_shuffle(e), path), true};

  double dshift = shift.to_double();
  auto f = [&](double t) {
    double y = std::min(1.0, std::max(0.0, dshift - t));
    return eval(e, t, y);
  };
  double val = adaptive_simpson(f, lo.to_double(), hi.to_double(), 1e-10, 40);
  return {Scalar::from_double(val), false};
}

}  // namespace

std::optional<GammaMiddleCase> gamma_middle_case(const CopulaExpr& e) {
  if (e.kind() != CopulaExpr::Kind::Ordinal) return std::nullopt;
  const auto& blocks = e.blocks();
  for (size_t j = 0; j < blocks.size(); ++j) {
    if (blocks[j].a < kHalf && kHalf < blocks[j].b) {
      Scalar c = (kOne - blocks[j].a - blocks[j].b) / (blocks[j].b - blocks[j].a);
      return GammaMiddleCase{j, c};
    }
  }
  return std::nullopt;
}

namespace detail {

std::optional<MeasureValue> try_phi(const CopulaExpr& e) {
  if (auto leaf = leaf_constant(e, Scalar(1), frac(-1, 2), kZero)) return leaf;
  switch (e.kind()) {
    case CopulaExpr::Kind::Shuffle:
      return MeasureValue{Scalar(6) * diagonal(e).integral() - Scalar(2), true};
    case CopulaExpr::Kind::Ordinal: {
      Scalar acc = kOne;
      bool exact = true;
      for (const OrdinalBlock& b : e.blocks()) {
        auto inner = try_phi(*b.summand);
        if (!inner) return std::nullopt;
        Scalar w = b.b - b.a;
        acc -= w * w * (kOne - inner->value);
        exact = exact && inner->exact;
      }
      return MeasureValue{acc, exact};
    }
    case CopulaExpr::Kind::Reflect: {
      // phi(C^sigma) = phi(C) - 3/2 gamma(C) for both reflections.
      auto p = try_phi(*e.reflect_of());
      auto g = try_gamma(*e.reflect_of());
      if (!p || !g) return std::nullopt;
      return MeasureValue{p->value - frac(3, 2) * g->value, p->exact && g->exact};
    }
    case CopulaExpr::Kind::Convex: {
      Scalar acc(0);
      bool exact = true;
      for (const ConvexPart& p : e.parts()) {
        auto inner = try_phi(*p.part);
        if (!inner) return std::nullopt;
        acc += p.weight * inner->value;
        exact = exact && inner->exact;
      }
      return MeasureValue{acc, exact};
    }
    default:
      return std::nullopt;
  }
}

std::optional<MeasureValue> try_gamma(const CopulaExpr& e) {
  if (auto leaf = leaf_constant(e, Scalar(1), Scalar(-1), kZero)) return leaf;
  switch (e.kind()) {
    case CopulaExpr::Kind::Shuffle:
      return MeasureValue{Scalar(4) * diagonal(e).integral() +
                              Scalar(4) * opposite_diagonal(e).integral() - Scalar(2),
                          true};
    case CopulaExpr::Kind::Reflect: {
      auto g = try_gamma(*e.reflect_of());
      if (!g) return std::nullopt;
      return MeasureValue{-g->value, g->exact};
    }
    case CopulaExpr::Kind::Convex: {
      Scalar acc(0);
      bool exact = true;
      for (const ConvexPart& p : e.parts()) {
        auto inner = try_gamma(*p.part);
        if (!inner) return std::nullopt;
        acc += p.weight * inner->value;
        exact = exact && inner->exact;
      }
      return MeasureValue{acc, exact};
    }
    case CopulaExpr::Kind::Ordinal:
      break;
    default:
      return std::nullopt;
  }

  const auto& blocks = e.blocks();
  auto middle = gamma_middle_case(e);

  // Footrule deficit sum shared by all three cases.
  Scalar deficit(0);
  bool exact = true;
  std::vector<Scalar> phis(blocks.size());
  for (size_t k = 0; k < blocks.size(); ++k) {
    auto inner = try_phi(*blocks[k].summand);
    if (!inner) return std::nullopt;
    phis[k] = inner->value;
    Scalar w = blocks[k].b - blocks[k].a;
    deficit += w * w * (kOne - inner->value);
    exact = exact && inner->exact;
  }

  if (!middle) return MeasureValue{kOne - kTwoThirds * deficit, exact};

  const OrdinalBlock& mid = blocks[middle->block_index];
  Scalar w = mid.b - mid.a;

  if (mid.a + mid.b == kOne) {
    auto g = try_gamma(*mid.summand);
    if (!g) return std::nullopt;
    Scalar phi_mid = phis[middle->block_index];
    Scalar rest = deficit - w * w * (kOne - phi_mid);
    return MeasureValue{kOne - w * w * (kOne - g->value) - kTwoThirds * rest,
                        exact && g->exact};
  }

  Scalar c = middle->c;
  MeasureValue window = antidiagonal_window(*mid.summand, c);
  Scalar cpos = max(kZero, c);
  Scalar value = Scalar(4) * w * w * cpos * cpos + Scalar(4) * mid.a -
                 Scalar(4) * mid.a * mid.a - kTwoThirds * deficit +
                 Scalar(4) * w * w * window.value;
  return MeasureValue{value, exact && window.exact};
}

std::optional<MeasureValue> try_tau(const CopulaExpr& e) {
  if (auto leaf = leaf_constant(e, Scalar(1), Scalar(-1), kZero)) return leaf;
  switch (e.kind()) {
    case CopulaExpr::Kind::Shuffle: {
      ShuffleOfM s = as_shuffle(e);
      return MeasureValue{Scalar(4) * line_integral(s, support_path(s)) - kOne, true};
    }
    case CopulaExpr::Kind::Ordinal: {
      Scalar acc = kOne;
      bool exact = true;
      for (const OrdinalBlock& b : e.blocks()) {
        auto inner = try_tau(*b.summand);
        if (!inner) return std::nullopt;
        Scalar w = b.b - b.a;
        acc -= w * w * (kOne - inner->value);
        exact = exact && inner->exact;
      }
      return MeasureValue{acc, exact};
    }
    case CopulaExpr::Kind::Reflect: {
      auto t = try_tau(*e.reflect_of());
      if (!t) return std::nullopt;
      return MeasureValue{-t->value, t->exact};
    }
    case CopulaExpr::Kind::Convex: {
      // Q is bilinear over mixtures: tau(sum w_i C_i) = sum_ij w_i w_j Q(C_i, C_j).
      const auto& parts = e.parts();
      Scalar acc(0);
      bool exact = true;
      for (size_t i = 0; i < parts.size(); ++i) {
        auto tii = try_tau(*parts[i].part);
        if (!tii) return std::nullopt;
        acc += parts[i].weight * parts[i].weight * tii->value;
        exact = exact && tii->exact;
        for (size_t j = i + 1; j < parts.size(); ++j) {
          auto qij = try_q(*parts[i].part, *parts[j].part);
          if (!qij) return std::nullopt;
          acc += Scalar(2) * parts[i].weight * parts[j].weight * qij->value;
          exact = exact && qij->exact;
        }
      }
      return MeasureValue{acc, exact};
    }
    default:
      return std::nullopt;
  }
}

std::optional<MeasureValue> try_rho(const CopulaExpr& e) {
  if (auto leaf = leaf_constant(e, Scalar(1), Scalar(-1), kZero)) return leaf;
  switch (e.kind()) {
    case CopulaExpr::Kind::Shuffle:
      return MeasureValue{Scalar(12) * volume_under(as_shuffle(e)) - Scalar(3), true};
    case CopulaExpr::Kind::Ordinal: {
      Scalar acc = kOne;
      bool exact = true;
      for (const OrdinalBlock& b : e.blocks()) {
        auto inner = try_rho(*b.summand);
        if (!inner) return std::nullopt;
        Scalar w = b.b - b.a;
        acc -= w * w * w * (kOne - inner->value);
        exact = exact && inner->exact;
      }
      return MeasureValue{acc, exact};
    }
    case CopulaExpr::Kind::Reflect: {
      auto r = try_rho(*e.reflect_of());
      if (!r) return std::nullopt;
      return MeasureValue{-r->value, r->exact};
    }
    case CopulaExpr::Kind::Convex: {
      Scalar acc(0);
      bool exact = true;
      for (const ConvexPart& p : e.parts()) {
        auto inner = try_rho(*p.part);
        if (!inner) return std::nullopt;
        acc += p.weight * inner->value;
        exact = exact && inner->exact;
      }
      return MeasureValue{acc, exact};
    }
    default:
      return std::nullopt;
  }
}

std::optional<MeasureValue> try_xi(const CopulaExpr& e) {
  switch (e.kind()) {
    case CopulaExpr::Kind::M:
    case CopulaExpr::Kind::W:
    case CopulaExpr::Kind::Shuffle:
      return MeasureValue{kOne, true};  // complete dependence
    case CopulaExpr::Kind::Pi:
      return MeasureValue{kZero, true};
    case CopulaExpr::Kind::Ordinal: {
      Scalar acc = kOne;
      bool exact = true;
      for (const OrdinalBlock& b : e.blocks()) {
        auto inner = try_xi(*b.summand);
        if (!inner) return std::nullopt;
        Scalar w = b.b - b.a;
        acc -= w * w * (kOne - inner->value);
        exact = exact && inner->exact;
      }
      return MeasureValue{acc, exact};
    }
    case CopulaExpr::Kind::Reflect:
      return try_xi(*e.reflect_of());  // invariant under both reflections
    case CopulaExpr::Kind::Convex:
      return std::nullopt;
  }
  return std::nullopt;
}

namespace {

// int over the path parameter of c2 along a graph path; nullopt when c2
// has no exact line restriction.
std::optional<MeasureValue> integral_along(const CopulaExpr& c2, const PlanarPath& path) {
  if (c2.kind() == CopulaExpr::Kind::Pi) return MeasureValue{product_integral(path), true};
  if (c2.kind() == CopulaExpr::Kind::Convex) {
    Scalar acc(0);
    bool exact = true;
    for (const ConvexPart& p : c2.parts()) {
      auto inner = integral_along(*p.part, path);
      if (!inner) return std::nullopt;
      acc += p.weight * inner->value;
      exact = exact && inner->exact;
    }
    return MeasureValue{acc, exact};
  }
  if (shuffle_normalizable(c2))
    return MeasureValue{line_integral(as_shuffle(c2), path), true};
  return std::nullopt;
}

std::optional<MeasureValue> q_one_way(const CopulaExpr& c1, const CopulaExpr& c2) {
  if (c1.kind() == CopulaExpr::Kind::Convex) {
    Scalar acc(0);
    bool exact = true;
    for (const ConvexPart& p : c1.parts()) {
      auto inner = q_one_way(*p.part, c2);
      if (!inner) return std::nullopt;
      acc += p.weight * inner->value;
      exact = exact && inner->exact;
    }
    return MeasureValue{acc, exact};
  }
  if (c1.kind() == CopulaExpr::Kind::Pi) {
    // Q(Pi, C) = rho(C) / 3.
    auto r = try_rho(c2);
    if (!r) return std::nullopt;
    return MeasureValue{r->value / Scalar(3), r->exact};
  }
  if (!shuffle_normalizable(c1)) return std::nullopt;
  auto integral = integral_along(c2, support_path(as_shuffle(c1)));
  if (!integral) return std::nullopt;
  return MeasureValue{Scalar(4) * integral->value - kOne, integral->exact};
}

}  // namespace

std::optional<MeasureValue> try_q(const CopulaExpr& c1, const CopulaExpr& c2) {
  if (auto q = q_one_way(c1, c2)) return q;
  return q_one_way(c2, c1);  // Q is symmetric
}

}  // namespace detail

Scalar concordance_q(const CopulaExpr& c1, const CopulaExpr& c2) {
  auto q = try_q(c1, c2);
  if (!q) throw NotComputableExactly("concordance function has no exact route here");
  return q->value;
}

Scalar rho(const CopulaExpr& e) {
  auto r = try_rho(e);
  if (!r) throw NotComputableExactly("rho has no closed form for this expression");
  return r->value;
}

Scalar tau(const CopulaExpr& e) {
  auto t = try_tau(e);
  if (!t) throw NotComputableExactly("tau has no closed form for this expression");
  return t->value;
}

Scalar phi(const CopulaExpr& e) {
  auto p = try_phi(e);
  if (!p) throw NotComputableExactly("phi has no closed form for this expression");
  return p->value;
}

Scalar gamma(const CopulaExpr& e) {
  auto g = try_gamma(e);
  if (!g) throw NotComputableExactly("gamma has no closed form for this expression");
  return g->value;
}

Scalar beta(const CopulaExpr& e) {
  return Scalar(4) * eval(e, kHalf, kHalf) - kOne;
}

Scalar xi(const CopulaExpr& e) {
  auto x = try_xi(e);
  if (!x) throw NotComputableExactly("xi has no closed form for this expression");
  return x->value;
}

MeasureVector all_measures(const CopulaExpr& e, int fallback_n) {
  MeasureVector out;
  auto r = try_rho(e);
  auto t = try_tau(e);
  auto p = try_phi(e);
  auto g = try_gamma(e);
  auto x = try_xi(e);
  out.beta = MeasureValue{beta(e), true};

  if (!r || !t || !p || !g || !x) {
    MeasureVector cb = cb_measures(checkerboard_of(e, fallback_n));
    if (!r) r = MeasureValue{cb.rho.value, false};
    if (!t) t = MeasureValue{cb.tau.value, false};
    if (!p) p = MeasureValue{cb.phi.value, false};
    if (!g) g = MeasureValue{cb.gamma.value, false};
    if (!x) x = MeasureValue{cb.xi.value, false};
  }
  out.rho = *r;
  out.tau = *t;
  out.phi = *p;
  out.gamma = *g;
  out.xi = *x;
  return out;
}

}  // namespace concordia
