#include <concordia/errors.hpp>
#include <concordia/measures.hpp>
#include <concordia/oracle.hpp>
#include <concordia/section.hpp>
#include <concordia/synthesis.hpp>

#include "helpers.hpp"

#include <doctest.h>

using namespace concordia;

namespace {

ExprPtr ordinal_pi_quarter() {
  return CopulaExpr::ordinal({OrdinalBlock{frac(1, 4), frac(3, 4), CopulaExpr::pi()}});
}

// phi / gamma / tau of the flattened normal form, bypassing the node-level
// propagation formulas.
MeasureVector leaf_level(const CopulaExpr& e) {
  return all_measures(*CopulaExpr::shuffle(as_shuffle(e)));
}

}  // namespace

TEST_SUITE_BEGIN("measures");

TEST_CASE("base copula constants") {
  MeasureVector m = all_measures(*CopulaExpr::m());
  for (const MeasureValue* v : {&m.rho, &m.tau, &m.phi, &m.gamma, &m.beta, &m.xi}) {
    CHECK(v->value == Scalar(1));
    CHECK(v->exact);
  }
  MeasureVector w = all_measures(*CopulaExpr::w());
  CHECK(w.rho.value == Scalar(-1));
  CHECK(w.tau.value == Scalar(-1));
  CHECK(w.phi.value == frac(-1, 2));
  CHECK(w.gamma.value == Scalar(-1));
  CHECK(w.beta.value == Scalar(-1));
  CHECK(w.xi.value == Scalar(1));
  MeasureVector p = all_measures(*CopulaExpr::pi());
  CHECK(p.rho.value == Scalar(0));
  CHECK(p.xi.value == Scalar(0));
  CHECK(p.beta.value == Scalar(0));
}

TEST_CASE("concordance function") {
  CHECK(concordance_q(*CopulaExpr::m(), *CopulaExpr::m()) == Scalar(1));
  // Q(C,M) = (2 phi + 1) / 3
  CHECK(concordance_q(*shuffle_cb(frac(1, 4)), *CopulaExpr::m()) == frac(1, 2));
  CHECK(concordance_q(*CopulaExpr::m(), *CopulaExpr::w()) == Scalar(0));
  // Q(C,Pi) = rho / 3
  ExprPtr cb = shuffle_cb(frac(1, 8));
  CHECK(concordance_q(*cb, *CopulaExpr::pi()) == rho(*cb) / Scalar(3));
}

TEST_CASE("concordance function against the checkerboard oracle") {
  ExprPtr c1 = shuffle_cb(frac(1, 8));
  ExprPtr c2 = shuffle_db(frac(1, 4));
  Scalar q = concordance_q(*c1, *c2);
  CHECK(abs(q - concordance_q(*c2, *c1)).to_double() <= 1e-12);
  // plug-in estimate: 4 E[C2(U,V)] - 1 under (U,V) ~ checkerboard of c1
  Checkerboard board = checkerboard_of(*c1, 1024);
  double acc = 0;
  for (int i = 0; i < board.n; ++i)
    for (int j = 0; j < board.n; ++j) {
      if (board.at(i, j) == 0) continue;
      double u = (i + 0.5) / board.n, v = (j + 0.5) / board.n;
      acc += board.at(i, j) * eval(*c2, u, v);
    }
  CHECK(q.to_double() == doctest::Approx(4 * acc - 1).epsilon(0).scale(1).epsilon(5e-3));
}

TEST_CASE("Q is symmetric on random shuffle pairs") {
  CounterRng rng(7701);
  for (int t = 0; t < 40; ++t) {
    ExprPtr a = CopulaExpr::shuffle(testutil::random_shuffle(rng));
    ExprPtr b = CopulaExpr::shuffle(testutil::random_shuffle(rng));
    CHECK(abs(concordance_q(*a, *b) - concordance_q(*b, *a)).to_double() <= 1e-12);
  }
}

TEST_CASE("footrule values") {
  CHECK(phi(*CopulaExpr::w()) == frac(-1, 2));
  CHECK(phi(*shuffle_cb(frac(1, 4))) == frac(1, 4));
  CHECK(phi(*ordinal_pi_quarter()) == frac(3, 4));
}

TEST_CASE("gamma values") {
  CHECK(gamma(*shuffle_cb(frac(1, 4))) == frac(1, 2));
  CHECK(gamma(*ordinal_pi_quarter()) == frac(3, 4));
}

TEST_CASE("gamma general case with an off-center straddling block") {
  ExprPtr e = CopulaExpr::ordinal({OrdinalBlock{frac(1, 10), frac(3, 5), CopulaExpr::w()}});
  auto middle = gamma_middle_case(*e);
  REQUIRE(middle.has_value());
  CHECK(middle->c == frac(3, 5));
  CHECK(gamma(*e) == frac(71, 100));
  MeasureVector cb = cb_measures(checkerboard_of(*e, 1024));
  CHECK(gamma(*e).to_double() ==
        doctest::Approx(cb.gamma.value.to_double()).epsilon(0).scale(1).epsilon(5e-3));
}

TEST_CASE("gamma symmetric case matches leaf-level recomputation") {
  CounterRng rng(88);
  for (int t = 0; t < 10; ++t) {
    ExprPtr shuffled = CopulaExpr::shuffle(testutil::random_shuffle(rng));
    ExprPtr centered =
        CopulaExpr::ordinal({OrdinalBlock{frac(1, 8), frac(7, 8), shuffled}});
    Scalar direct = gamma(*centered);
    Scalar flat = gamma(*CopulaExpr::shuffle(as_shuffle(*centered)));
    CHECK(abs(direct - flat).to_double() <= 1e-12);
  }
}

TEST_CASE("the straddling block of an ordinal sum is identified") {
  CHECK(gamma_middle_case(*ordinal_pi_quarter()).has_value());
  ExprPtr off =
      CopulaExpr::ordinal({OrdinalBlock{frac(1, 8), frac(1, 2), CopulaExpr::pi()}});
  CHECK(!gamma_middle_case(*off).has_value());  // open interval excludes 1/2
}

TEST_CASE("tau values") {
  CHECK(tau(*shuffle_db(frac(1, 2))) == Scalar(0));
  CHECK(tau(*ordinal_pi_quarter()) == frac(3, 4));
  ExprPtr mix = CopulaExpr::convex(
      {ConvexPart{frac(1, 2), CopulaExpr::m()}, ConvexPart{frac(1, 2), CopulaExpr::w()}});
  CHECK(tau(*mix) == Scalar(0));
}

TEST_CASE("rho values") {
  CHECK(rho(*CopulaExpr::w()) == Scalar(-1));
  CHECK(rho(*ordinal_pi_quarter()) == frac(7, 8));
  // dual route for graph-supported leaves: 12 * int u h(u) du - 3
  CounterRng rng(31);
  for (int t = 0; t < 25; ++t) {
    ShuffleOfM s = testutil::random_shuffle(rng);
    Scalar via_cells = rho(*CopulaExpr::shuffle(s));
    Scalar via_graph = Scalar(12) * product_integral(support_path(s)) - Scalar(3);
    CHECK(via_cells == via_graph);
  }
  MeasureVector cb = cb_measures(checkerboard_of(*shuffle_cb(frac(1, 4)), 1024));
  CHECK(rho(*shuffle_cb(frac(1, 4))).to_double() ==
        doctest::Approx(cb.rho.value.to_double()).epsilon(0).scale(1).epsilon(5e-3));
}

TEST_CASE("beta values") {
  CHECK(beta(*CopulaExpr::pi()) == Scalar(0));
  CHECK(beta(*ordinal_pi_quarter()) == frac(1, 2));
  ExprPtr off = CopulaExpr::ordinal(
      {OrdinalBlock{frac(3, 10), frac(9, 10), CopulaExpr::pi()}});
  CHECK(beta(*off) == frac(7, 15));
}

TEST_CASE("beta of an ordinal sum agrees with the block shortcut formulas") {
  CounterRng rng(4242);
  for (int t = 0; t < 30; ++t) {
    ExprPtr e = testutil::random_expr(rng, 2);
    if (e->kind() != CopulaExpr::Kind::Ordinal) continue;
    Scalar direct = beta(*e);
    // shortcut: 1 if no block holds 1/2; otherwise 4a + 4(b-a) delta(...) - 1
    Scalar expected(1);
    for (const OrdinalBlock& b : e->blocks()) {
      if (b.a < frac(1, 2) && frac(1, 2) < b.b) {
        Scalar w = b.b - b.a;
        Scalar inner = (frac(1, 2) - b.a) / w;
        expected = Scalar(4) * b.a + Scalar(4) * w * eval(*b.summand, inner, inner) -
                   Scalar(1);
      }
    }
    CHECK(abs(direct - expected).to_double() <= 1e-12);
  }
}

TEST_CASE("xi values") {
  CHECK(xi(*CopulaExpr::pi()) == Scalar(0));
  CHECK(xi(*ordinal_pi_quarter()) == frac(3, 4));
  CHECK(xi(*shuffle_cb(frac(1, 8))) == Scalar(1));
  CHECK(xi(*CopulaExpr::reflect(1, shuffle_cb(frac(1, 8)))) == Scalar(1));
  ExprPtr mix = CopulaExpr::convex(
      {ConvexPart{frac(1, 2), CopulaExpr::m()}, ConvexPart{frac(1, 2), CopulaExpr::w()}});
  CHECK_THROWS_AS(xi(*mix), NotComputableExactly);
}

TEST_CASE("the middle nest scales every coefficient as stated") {
  // rho cubes the width, beta is linear, the others are quadratic
  ExprPtr nested = nest_middle(frac(1, 4), CopulaExpr::pi());
  MeasureVector m = all_measures(*nested);
  CHECK(m.rho.value == frac(7, 8));
  CHECK(m.tau.value == frac(3, 4));
  CHECK(m.phi.value == frac(3, 4));
  CHECK(m.gamma.value == frac(3, 4));
  CHECK(m.beta.value == frac(1, 2));
  CHECK(m.xi.value == frac(3, 4));
}

TEST_CASE("ordinal propagation equals leaf-level recomputation") {
  // the two-parameter nest of the six-piece family has an 8-piece normal form
  ExprPtr nested = nest_middle(frac(1, 8), shuffle_cb(frac(1, 8)));
  CHECK(as_shuffle(*nested).piece_count() == 8);
  MeasureVector via_node = all_measures(*nested);
  MeasureVector via_leaf = leaf_level(*nested);
  CHECK(via_node.rho.value == via_leaf.rho.value);
  CHECK(via_node.tau.value == via_leaf.tau.value);
  CHECK(via_node.phi.value == via_leaf.phi.value);
  CHECK(via_node.gamma.value == via_leaf.gamma.value);
  CHECK(via_node.beta.value == via_leaf.beta.value);
  CHECK(via_node.xi.value == via_leaf.xi.value);
}

TEST_CASE("tau of mixtures expands bilinearly and checks out against the board") {
  ExprPtr a = shuffle_cb(frac(1, 8));
  ExprPtr b = shuffle_db(frac(3, 8));
  ExprPtr mix = CopulaExpr::convex({ConvexPart{frac(1, 3), a}, ConvexPart{frac(2, 3), b}});
  Scalar expect = frac(1, 9) * tau(*a) + frac(4, 9) * tau(*b) +
                  frac(4, 9) * concordance_q(*a, *b);
  CHECK(tau(*mix) == expect);
  MeasureVector cb = cb_measures(checkerboard_of(*mix, 1024));
  CHECK(tau(*mix).to_double() ==
        doctest::Approx(cb.tau.value.to_double()).epsilon(0).scale(1).epsilon(5e-3));
}

TEST_CASE("reflection contract on random shuffles") {
  CounterRng rng(606);
  for (int t = 0; t < 60; ++t) {
    ExprPtr c = CopulaExpr::shuffle(testutil::random_shuffle(rng));
    // leaf-level measures of the reflected copula, no propagation shortcut
    MeasureVector refl = leaf_level(*CopulaExpr::reflect(2, c));
    Scalar phi_c = phi(*c), gamma_c = gamma(*c), tau_c = tau(*c);
    CHECK(abs(gamma_c - frac(2, 3) * (phi_c - refl.phi.value)).to_double() <= 1e-12);
    CHECK(abs(refl.tau.value + tau_c).to_double() <= 1e-12);
    CHECK(abs(refl.gamma.value + gamma_c).to_double() <= 1e-12);
    CHECK(abs(refl.phi.value - (phi_c - frac(3, 2) * gamma_c)).to_double() <= 1e-12);
  }
}

TEST_CASE("pairwise coefficient inequalities on random expressions") {
  CounterRng rng(321);
  for (int t = 0; t < 150; ++t) {
    ExprPtr e = testutil::random_expr(rng, 2);
    MeasureVector m = all_measures(*e);
    double p = m.phi.value.to_double(), g = m.gamma.value.to_double(),
           tv = m.tau.value.to_double();
    const double slack = 1e-10;
    CHECK(g >= 4.0 / 3 * p - 1.0 / 3 - slack);
    CHECK(g <= std::min(4.0 / 3 * p + 1.0 / 6, 2.0 / 3 * p + 1.0 / 3) + slack);
    CHECK(tv >= 4.0 / 3 * p - 1.0 / 3 - slack);
    CHECK(tv <= 2.0 / 3 * p + 1.0 / 3 + slack);
    CHECK(tv >= std::max(2.0 / 3 * g - 1.0 / 3, 2 * g - 1) - slack);
    CHECK(tv <= std::min(2.0 / 3 * g + 1.0 / 3, 2 * g + 1) + slack);
    CHECK(p >= -0.5 - slack);
    CHECK(m.rho.value.to_double() >= -1 - slack);
    CHECK(m.xi.value.to_double() >= -slack);
  }
}

TEST_CASE("exactness flags downgrade where no closed form exists") {
  // mixtures have no exact xi; the checkerboard fallback fills it in
  ExprPtr mix = CopulaExpr::convex(
      {ConvexPart{frac(1, 2), CopulaExpr::m()}, ConvexPart{frac(1, 2), CopulaExpr::w()}});
  MeasureVector m = all_measures(*mix, 256);
  CHECK(m.tau.exact);
  CHECK_FALSE(m.xi.exact);
  // d1 of the mixture is (1{v>=u} + 1{v>=1-u}) / 2, so xi = 1/4
  CHECK(m.xi.value.to_double() == doctest::Approx(0.25).epsilon(0).scale(1).epsilon(2e-2));

  // straddling block whose summand is neither a graph nor independence:
  // gamma goes through quadrature and is flagged inexact
  ExprPtr inner = ordinal_pi_quarter();
  ExprPtr outer =
      CopulaExpr::ordinal({OrdinalBlock{frac(1, 10), frac(7, 10), inner}});
  MeasureVector g = all_measures(*outer);
  CHECK_FALSE(g.gamma.exact);
  CHECK(g.phi.exact);
  MeasureVector cb = cb_measures(checkerboard_of(*outer, 1024));
  CHECK(g.gamma.value.to_double() ==
        doctest::Approx(cb.gamma.value.to_double()).epsilon(0).scale(1).epsilon(5e-3));
}

TEST_CASE("tau of a mixture with a non-graph part falls back to the oracle") {
  ExprPtr inner = ordinal_pi_quarter();
  ExprPtr mix = CopulaExpr::convex(
      {ConvexPart{frac(1, 2), inner}, ConvexPart{frac(1, 2), CopulaExpr::m()}});
  CHECK_THROWS_AS(tau(*mix), NotComputableExactly);
  MeasureVector m = all_measures(*mix, 512);
  CHECK_FALSE(m.tau.exact);
  CHECK(m.phi.exact);  // footrule mixes affinely regardless
}

TEST_SUITE_END();
