#include <concordia/errors.hpp>
#include <concordia/shuffle.hpp>

#include "helpers.hpp"

#include <doctest.h>

using namespace concordia;

namespace {

ShuffleOfM cb_shuffle(const Scalar& b) {
  Scalar half = frac(1, 2);
  return ShuffleOfM({b, half - b, half, half + b, Scalar(1) - b}, {3, 5, 1, 6, 2, 4},
                    {1, 1, 1, 1, 1, 1});
}

}  // namespace

TEST_SUITE_BEGIN("shuffle");

TEST_CASE("validation rejects malformed data") {
  CHECK_THROWS_AS(ShuffleOfM({frac(1, 2)}, {1, 1}, {1, 1}), ValidationError);
  CHECK_THROWS_AS(ShuffleOfM({frac(1, 2)}, {1, 2}, {1}), ValidationError);
  CHECK_THROWS_AS(ShuffleOfM({frac(1, 2)}, {1, 2}, {1, 0}), ValidationError);
  CHECK_THROWS_AS(ShuffleOfM({frac(3, 4), frac(1, 4)}, {1, 2, 3}, {1, 1, 1}),
                  ValidationError);
  CHECK_THROWS_AS(ShuffleOfM({frac(1, 2)}, {1}, {1}), ValidationError);
}

TEST_CASE("derived image bands take the width of their source piece") {
  ShuffleOfM s({frac(1, 4)}, {2, 1}, {1, 1});
  // piece 1 (width 1/4) feeds band 2, piece 2 (width 3/4) feeds band 1
  CHECK(s.images()[0] == Scalar(0));
  CHECK(s.images()[1] == frac(3, 4));
  CHECK(s.images()[2] == Scalar(1));
}

TEST_CASE("h follows the piecewise formula") {
  ShuffleOfM s = cb_shuffle(frac(1, 4));
  CHECK(s.h(frac(1, 10)) == frac(7, 20));    // 0.1 -> 0.35
  CHECK(s.h(frac(3, 10)) == frac(1, 20));    // 0.3 -> 0.05
  CHECK(s.h(Scalar(0)) == Scalar(0));
  CHECK(s.h(Scalar(1)) == Scalar(1));

  ShuffleOfM id = ShuffleOfM::identity();
  CHECK(id.h(frac(21, 50)) == frac(21, 50));  // h of M is the identity

  ShuffleOfM anti = ShuffleOfM::antidiagonal();
  CHECK(anti.h(frac(1, 4)) == frac(3, 4));
}

TEST_CASE("interior breakpoints map to image breakpoints") {
  ShuffleOfM s = cb_shuffle(frac(1, 4));
  // support view is 4 pieces cut at 1/4, 1/2, 3/4
  CHECK(s.h(frac(1, 4)) == frac(1, 4));
  CHECK(s.h(frac(1, 2)) == frac(1, 2));
  CHECK(s.h(frac(3, 4)) == frac(3, 4));
}

TEST_CASE("zero-width pieces are kept raw but dropped from the support") {
  ShuffleOfM s = cb_shuffle(frac(1, 4));
  CHECK(s.piece_count() == 6);
  CHECK(s.raw_segments().size() == 6);
  CHECK(s.support().size() == 4);
  CHECK(s.normalized().piece_count() == 4);
}

TEST_CASE("normalization merges co-linear runs") {
  // three pieces forming the identity
  ShuffleOfM s({frac(1, 3), frac(2, 3)}, {1, 2, 3}, {1, 1, 1});
  ShuffleOfM n = s.normalized();
  CHECK(n.piece_count() == 1);
  CHECK(n.support()[0].flip == 1);

  // descending runs merge too
  ShuffleOfM w3({frac(1, 3), frac(2, 3)}, {3, 2, 1}, {-1, -1, -1});
  CHECK(w3.normalized().piece_count() == 1);
  CHECK(w3.normalized().support()[0].flip == -1);
}

TEST_CASE("cdf matches the segment mass oracle on rectangles") {
  CounterRng rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    ShuffleOfM s = testutil::random_shuffle(rng);
    for (int k = 0; k < 40; ++k) {
      double u = rng.next_double(), v = rng.next_double();
      CHECK(s.cdf(u, v) ==
            doctest::Approx(testutil::segment_rect_mass(s, 0, u, 0, v)).epsilon(1e-12));
    }
  }
}

TEST_CASE("scalar and double cdf agree") {
  CounterRng rng(5);
  ShuffleOfM s = testutil::random_shuffle(rng);
  for (int k = 0; k < 50; ++k) {
    double u = rng.next_double(), v = rng.next_double();
    CHECK(s.cdf(Scalar::from_double(u), Scalar::from_double(v)).to_double() ==
          doctest::Approx(s.cdf(u, v)).epsilon(1e-14));
  }
}

TEST_CASE("reflections transform the support as expected") {
  ShuffleOfM s = cb_shuffle(frac(1, 4));
  ShuffleOfM r2 = s.reflected(2);
  for (const Segment& seg : r2.support()) CHECK(seg.flip == -1);

  // sigma_2 pointwise: C^s2(u,v) = u - C(u, 1-v)
  CounterRng rng(7);
  for (int k = 0; k < 100; ++k) {
    double u = rng.next_double(), v = rng.next_double();
    CHECK(r2.cdf(u, v) == doctest::Approx(u - s.cdf(u, 1 - v)).epsilon(1e-12));
  }
  ShuffleOfM r1 = s.reflected(1);
  for (int k = 0; k < 100; ++k) {
    double u = rng.next_double(), v = rng.next_double();
    CHECK(r1.cdf(u, v) == doctest::Approx(v - s.cdf(1 - u, v)).epsilon(1e-12));
  }
}

TEST_CASE("from_segments rejects broken partitions") {
  std::vector<Segment> gap{{Scalar(0), frac(1, 2), Scalar(0), frac(1, 2), 1}};
  CHECK_THROWS_AS(ShuffleOfM::from_segments(gap, false), ValidationError);

  std::vector<Segment> skew{{Scalar(0), frac(1, 2), Scalar(0), frac(3, 4), 1},
                            {frac(1, 2), Scalar(1), frac(3, 4), Scalar(1), 1}};
  CHECK_THROWS_AS(ShuffleOfM::from_segments(skew, false), ValidationError);
}

TEST_SUITE_END();
