#include <concordia/errors.hpp>
#include <concordia/expr.hpp>
#include <concordia/synthesis.hpp>

#include "helpers.hpp"

#include <doctest.h>

using namespace concordia;
using testutil::grid_distance;

TEST_SUITE_BEGIN("expr");

TEST_CASE("base copula evaluation") {
  CHECK(eval(*CopulaExpr::m(), frac(3, 10), frac(7, 10)) == frac(3, 10));
  CHECK(eval(*CopulaExpr::w(), frac(3, 10), frac(3, 5)) == Scalar(0));
  CHECK(eval(*CopulaExpr::pi(), frac(1, 2), frac(1, 2)) == frac(1, 4));
}

TEST_CASE("shuffle evaluation hits the known diagonal values") {
  ExprPtr cb = shuffle_cb(frac(1, 4));
  CHECK(eval(*cb, frac(1, 2), frac(1, 2)) == frac(1, 2));
  CHECK(eval(*cb, frac(1, 4), frac(1, 4)) == Scalar(0));
}

TEST_CASE("ordinal sums rescale their blocks") {
  ExprPtr e = CopulaExpr::ordinal({OrdinalBlock{frac(1, 4), frac(3, 4), CopulaExpr::pi()}});
  CHECK(eval(*e, frac(1, 2), frac(1, 2)) == frac(3, 8));
  // outside the block it is M
  CHECK(eval(*e, frac(1, 8), frac(7, 8)) == frac(1, 8));
}

TEST_CASE("rect_volume basics") {
  CHECK(rect_volume(*CopulaExpr::pi(), Scalar(0), frac(1, 2), Scalar(0), frac(1, 2)) ==
        frac(1, 4));
  CHECK(rect_volume(*CopulaExpr::m(), Scalar(0), frac(1, 2), frac(1, 2), Scalar(1)) ==
        Scalar(0));
  CHECK_THROWS_AS(
      rect_volume(*CopulaExpr::m(), frac(1, 2), Scalar(0), Scalar(0), Scalar(1)),
      ArgumentError);
}

TEST_CASE("rect_volume of the six-piece shuffle against the segment oracle") {
  ExprPtr cb = shuffle_cb(frac(1, 4));
  CHECK(rect_volume(*cb, Scalar(0), frac(1, 4), frac(1, 4), frac(1, 2)) == frac(1, 4));
  ShuffleOfM s = as_shuffle(*cb);
  CounterRng rng(11);
  for (int k = 0; k < 200; ++k) {
    double a = rng.next_double(), b = rng.next_double();
    double c = rng.next_double(), d = rng.next_double();
    if (a > b) std::swap(a, b);
    if (c > d) std::swap(c, d);
    CHECK(rect_volume(*cb, a, b, c, d) ==
          doctest::Approx(testutil::segment_rect_mass(s, a, b, c, d)).epsilon(1e-12));
  }
}

TEST_CASE("reflection factories match their defining formulas") {
  ExprPtr m = CopulaExpr::m();
  ExprPtr w = CopulaExpr::w();
  CHECK(grid_distance(*CopulaExpr::reflect(2, m), *w) <= 1e-15);
  CHECK(grid_distance(*CopulaExpr::reflect(2, w), *m) <= 1e-15);
  CHECK_THROWS_AS(CopulaExpr::reflect(3, m), ValidationError);
}

TEST_CASE("validation of ordinal and convex nodes") {
  CHECK_THROWS_AS(
      CopulaExpr::ordinal({OrdinalBlock{frac(1, 2), frac(1, 2), CopulaExpr::m()}}),
      ValidationError);
  CHECK_THROWS_AS(
      CopulaExpr::ordinal({OrdinalBlock{Scalar(0), frac(1, 2), CopulaExpr::m()},
                           OrdinalBlock{frac(1, 4), Scalar(1), CopulaExpr::m()}}),
      ValidationError);
  CHECK_THROWS_AS(
      CopulaExpr::convex({ConvexPart{frac(1, 2), CopulaExpr::m()},
                          ConvexPart{frac(1, 4), CopulaExpr::w()}}),
      ValidationError);
  CHECK_THROWS_AS(CopulaExpr::convex({ConvexPart{frac(-1, 2), CopulaExpr::m()},
                                      ConvexPart{frac(3, 2), CopulaExpr::w()}}),
                  ValidationError);
}

TEST_CASE("as_shuffle flattens ordinal sums and reflections") {
  // identity ordinal sum changes nothing
  ExprPtr cb = shuffle_cb(frac(1, 8));
  ExprPtr wrapped = CopulaExpr::ordinal({OrdinalBlock{Scalar(0), Scalar(1), cb}});
  CHECK(grid_distance(*CopulaExpr::shuffle(as_shuffle(*wrapped)), *cb) == 0.0);
  CHECK(as_shuffle(*wrapped).piece_count() == as_shuffle(*cb).piece_count());

  // M blocks absorb into the ambient M
  ExprPtr mblock =
      CopulaExpr::ordinal({OrdinalBlock{frac(1, 4), frac(3, 4), CopulaExpr::m()}});
  CHECK(as_shuffle(*mblock).piece_count() == 1);

  // reflected three-piece family: all flips reversed, pointwise equal to
  // the defining formula on a grid
  ExprPtr db = shuffle_db(frac(1, 4));
  ShuffleOfM refl = as_shuffle(*CopulaExpr::reflect(2, db));
  CHECK(refl.piece_count() == 3);
  CHECK(grid_distance(*CopulaExpr::shuffle(refl), *CopulaExpr::reflect(2, db)) <= 1e-12);
}

TEST_CASE("as_shuffle refuses convex nodes and the independence copula") {
  CHECK_THROWS_AS(as_shuffle(*CopulaExpr::pi()), NotAShuffle);
  ExprPtr mix = CopulaExpr::convex(
      {ConvexPart{frac(1, 2), CopulaExpr::m()}, ConvexPart{frac(1, 2), CopulaExpr::w()}});
  CHECK_THROWS_AS(as_shuffle(*mix), NotAShuffle);
  CHECK_THROWS_AS(
      as_shuffle(*CopulaExpr::ordinal(
          {OrdinalBlock{frac(1, 4), frac(3, 4), CopulaExpr::pi()}})),
      NotAShuffle);
  CHECK(shuffle_normalizable(*CopulaExpr::m()));
  CHECK_FALSE(shuffle_normalizable(*mix));
}

TEST_CASE("Frechet-Hoeffding sandwich and 2-increasingness on random expressions") {
  CounterRng rng(101);
  for (int t = 0; t < 20; ++t) {
    ExprPtr e = testutil::random_expr(rng, 2);
    for (int k = 0; k < 500; ++k) {
      double u = rng.next_double(), v = rng.next_double();
      double c = eval(*e, u, v);
      CHECK(c >= std::max(0.0, u + v - 1) - 1e-12);
      CHECK(c <= std::min(u, v) + 1e-12);

      double u2 = u + (1 - u) * rng.next_double();
      double v2 = v + (1 - v) * rng.next_double();
      CHECK(rect_volume(*e, u, u2, v, v2) >= -1e-12);
    }
  }
}

TEST_CASE("uniform marginals hold exactly on the grid") {
  CounterRng rng(33);
  for (int t = 0; t < 10; ++t) {
    ExprPtr e = testutil::random_expr(rng, 2);
    for (int i = 0; i <= 100; ++i) {
      Scalar u = frac(i, 100);
      CHECK(eval(*e, u, Scalar(1)) == u);
      CHECK(eval(*e, Scalar(1), u) == u);
      CHECK(eval(*e, u, Scalar(0)) == Scalar(0));
      CHECK(eval(*e, Scalar(0), u) == Scalar(0));
    }
  }
}

TEST_CASE("reflecting twice on the same axis is the identity pointwise") {
  CounterRng rng(55);
  for (int t = 0; t < 10; ++t) {
    ExprPtr e = testutil::random_expr(rng, 2);
    for (int axis : {1, 2}) {
      ExprPtr twice = CopulaExpr::reflect(axis, CopulaExpr::reflect(axis, e));
      for (int k = 0; k < 100; ++k) {
        double u = rng.next_double(), v = rng.next_double();
        CHECK(eval(*twice, u, v) == doctest::Approx(eval(*e, u, v)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("as_shuffle is pointwise sound on a 101x101 grid") {
  CounterRng rng(77);
  for (int t = 0; t < 12; ++t) {
    ExprPtr e = testutil::random_expr(rng, 2, /*allow_convex=*/false, /*allow_pi=*/false);
    ExprPtr flat = CopulaExpr::shuffle(as_shuffle(*e));
    CHECK(grid_distance(*e, *flat) <= 1e-12);
  }
}

TEST_SUITE_END();
