#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace concordia {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Dual-mode number: an exact rational or a double.
///
/// Arithmetic is contagious the same way NaN is: combining two rationals
/// stays rational, anything touching a double becomes a double. A pipeline
/// fed only rational inputs therefore produces exact rational outputs,
/// while decimal inputs flow through ordinary floating point.
///
/// Comparisons between two rationals are exact; mixed comparisons go
/// through double.
class Scalar {
 public:
  Scalar() : rat_(0), is_rat_(true) {}
  Scalar(int v) : rat_(v), is_rat_(true) {}
  Scalar(long v) : rat_(v), is_rat_(true) {}
  Scalar(long long v) : rat_(v), is_rat_(true) {}
  Scalar(Rational v) : rat_(std::move(v)), is_rat_(true) {}
  Scalar(BigInt num, BigInt den);

  static Scalar from_double(double v) {
    Scalar s;
    s.is_rat_ = false;
    s.dbl_ = v;
    return s;
  }
  /// Parses "p/q", "p", or a decimal literal ("0.25" stays a double).
  static Scalar parse(const std::string& text);

  bool is_rational() const { return is_rat_; }
  const Rational& rational() const;
  /// Exact value as a rational; doubles convert by their binary expansion.
  Rational to_rational() const;
  double to_double() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  // Exact when both sides are rational, via double otherwise.
  friend bool operator==(const Scalar& a, const Scalar& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return cmp(a, b) != 0; }
  friend bool operator<(const Scalar& a, const Scalar& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return cmp(a, b) >= 0; }

  /// "p/q" (or "p" when q == 1) for rationals, shortest round-trip decimal
  /// for doubles.
  std::string str() const;

 private:
  static int cmp(const Scalar& a, const Scalar& b);

  Rational rat_;
  double dbl_ = 0.0;
  bool is_rat_;
};

inline Scalar min(const Scalar& a, const Scalar& b) { return a <= b ? a : b; }
inline Scalar max(const Scalar& a, const Scalar& b) { return a >= b ? a : b; }
inline Scalar abs(const Scalar& a) { return a < Scalar(0) ? -a : a; }

/// Rational square root when the operand is a perfect square of a rational,
/// nullopt otherwise.
std::optional<Rational> exact_sqrt(const Rational& r);

/// Square root preserving exactness where possible.
Scalar sqrt(const Scalar& s);

/// Convenience for fractions with small integer parts.
inline Scalar frac(long long num, long long den) { return Scalar(Rational(num, den)); }

}  // namespace concordia
