#include "concordia/scalar.hpp"

#include "concordia/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace concordia {

Scalar::Scalar(BigInt num, BigInt den) : is_rat_(true) {
  if (den == 0) throw ArgumentError("rational with zero denominator");
  rat_ = Rational(std::move(num), std::move(den));
}

const Rational& Scalar::rational() const {
  if (!is_rat_) throw ArgumentError("scalar is not rational");
  return rat_;
}

Rational Scalar::to_rational() const {
  if (is_rat_) return rat_;
  if (!std::isfinite(dbl_)) throw ArgumentError("non-finite scalar has no rational value");
  // Doubles are dyadic rationals; the conversion below is exact.
  int exp = 0;
  double mant = std::frexp(dbl_, &exp);
  BigInt num = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(num);
  if (exp > 0) {
    r *= Rational(BigInt(1) << exp);
  } else if (exp < 0) {
    r /= Rational(BigInt(1) << -exp);
  }
  return r;
}

double Scalar::to_double() const {
  return is_rat_ ? rat_.convert_to<double>() : dbl_;
}

Scalar Scalar::operator-() const {
  if (is_rat_) return Scalar(Rational(-rat_));
  return from_double(-dbl_);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_rat_ && o.is_rat_) {
    rat_ += o.rat_;
  } else {
    *this = from_double(to_double() + o.to_double());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_rat_ && o.is_rat_) {
    rat_ -= o.rat_;
  } else {
    *this = from_double(to_double() - o.to_double());
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rat_ && o.is_rat_) {
    rat_ *= o.rat_;
  } else {
    *this = from_double(to_double() * o.to_double());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (is_rat_ && o.is_rat_) {
    if (o.rat_ == 0) throw ArgumentError("division by zero");
    rat_ /= o.rat_;
  } else {
    *this = from_double(to_double() / o.to_double());
  }
  return *this;
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
  if (a.is_rat_ && b.is_rat_) {
    if (a.rat_ < b.rat_) return -1;
    if (a.rat_ > b.rat_) return 1;
    return 0;
  }
  double x = a.to_double(), y = b.to_double();
  if (x < y) return -1;
  if (x > y) return 1;
  return 0;
}

Scalar Scalar::parse(const std::string& text) {
  if (text.empty()) throw ArgumentError("empty scalar literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    try {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      return Scalar(std::move(num), std::move(den));
    } catch (const std::runtime_error&) {
      throw ArgumentError("cannot parse scalar literal '" + text + "'");
    }
  }
  if (text.find('.') == std::string::npos && text.find('e') == std::string::npos &&
      text.find('E') == std::string::npos) {
    try {
      return Scalar(Rational(BigInt(text)));
    } catch (const std::runtime_error&) {
      throw ArgumentError("cannot parse scalar literal '" + text + "'");
    }
  }
  double v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ArgumentError("cannot parse scalar literal '" + text + "'");
  return from_double(v);
}

std::string Scalar::str() const {
  if (is_rat_) {
    std::string s = numerator(rat_).str();
    if (denominator(rat_) != 1) s += "/" + denominator(rat_).str();
    return s;
  }
  char buf[32];
  int n = std::snprintf(buf, sizeof buf, "%.17g", dbl_);
  return std::string(buf, buf + n);
}

std::optional<Rational> exact_sqrt(const Rational& r) {
  if (r < 0) return std::nullopt;
  BigInt num = numerator(r), den = denominator(r);
  BigInt sn = boost::multiprecision::sqrt(num);
  BigInt sd = boost::multiprecision::sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn, sd);
}

Scalar sqrt(const Scalar& s) {
  if (s < Scalar(0)) throw ArgumentError("sqrt of negative scalar");
  if (s.is_rational()) {
    if (auto r = exact_sqrt(s.rational())) return Scalar(*r);
  }
  return Scalar::from_double(std::sqrt(s.to_double()));
}

}  // namespace concordia
