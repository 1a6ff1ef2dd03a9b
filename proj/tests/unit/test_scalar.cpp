#include <concordia/errors.hpp>
#include <concordia/scalar.hpp>

#include <doctest.h>

using namespace concordia;

TEST_SUITE_BEGIN("scalar");

TEST_CASE("rational arithmetic is exact") {
  Scalar a = frac(1, 3), b = frac(1, 6);
  CHECK((a + b) == frac(1, 2));
  CHECK((a - b) == frac(1, 6));
  CHECK((a * b) == frac(1, 18));
  CHECK((a / b) == Scalar(2));
  CHECK((a + b).is_rational());
}

TEST_CASE("doubles are contagious") {
  Scalar a = frac(1, 3);
  Scalar x = Scalar::from_double(0.5);
  CHECK_FALSE((a + x).is_rational());
  CHECK_FALSE((a * x).is_rational());
  CHECK((a + x).to_double() == doctest::Approx(1.0 / 3 + 0.5));
}

TEST_CASE("parse accepts fractions, integers and decimals") {
  CHECK(Scalar::parse("3/4") == frac(3, 4));
  CHECK(Scalar::parse("-1/2") == frac(-1, 2));
  CHECK(Scalar::parse("7").is_rational());
  CHECK(Scalar::parse("7") == Scalar(7));
  Scalar d = Scalar::parse("0.25");
  CHECK_FALSE(d.is_rational());
  CHECK(d.to_double() == 0.25);
  CHECK_THROWS_AS(Scalar::parse("1/0"), ArgumentError);
  CHECK_THROWS_AS(Scalar::parse("abc"), ArgumentError);
}

TEST_CASE("str round-trips both modes") {
  CHECK(frac(3, 16).str() == "3/16");
  CHECK(Scalar(-1).str() == "-1");
  CHECK(Scalar::parse(Scalar::from_double(0.1).str()).to_double() == 0.1);
}

TEST_CASE("to_rational is the exact binary expansion of a double") {
  Scalar x = Scalar::from_double(0.3);
  Rational r = x.to_rational();
  CHECK(r.convert_to<double>() == 0.3);
  CHECK(Scalar::from_double(0.25).to_rational() == Rational(1, 4));
}

TEST_CASE("exact square roots are detected") {
  CHECK(*exact_sqrt(Rational(9, 16)) == Rational(3, 4));
  CHECK(!exact_sqrt(Rational(2)));
  CHECK(!exact_sqrt(Rational(-1)));
  CHECK(sqrt(frac(1, 4)) == frac(1, 2));
  CHECK(sqrt(frac(1, 4)).is_rational());
  CHECK_FALSE(sqrt(frac(1, 2)).is_rational());
}

TEST_CASE("mixed comparisons go through double") {
  CHECK(frac(1, 2) == Scalar::from_double(0.5));
  CHECK(frac(1, 3) < Scalar::from_double(0.34));
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), ArgumentError);
}

TEST_SUITE_END();
