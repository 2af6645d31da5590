#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "pointhom/errors.hpp"

namespace pointhom {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string rational_to_string(const Rational& r);
Rational rational_from_string(const std::string& text);
double rational_to_double(const Rational& r);

/// An exact element a + b*sqrt(d) of a real quadratic extension of the
/// rationals. d is a squarefree non-negative integer; d <= 1 denotes a plain
/// rational (then b == 0 in canonical form).
class Scalar {
 public:
  Scalar() : a_(0), b_(0), d_(0) {}
  Scalar(int value) : a_(value), b_(0), d_(0) {}  // NOLINT(runtime/explicit)
  Scalar(Rational a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT
  Scalar(Rational a, Rational b, unsigned d);

  const Rational& rat_part() const { return a_; }
  const Rational& surd_part() const { return b_; }
  unsigned radicand() const { return d_; }
  bool is_rational() const { return d_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  /// Exact sign in {-1, 0, +1}.
  int sign() const;

  Scalar operator-() const { return Scalar(-a_, -b_, d_); }
  Scalar inverse() const;

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y);
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

  Scalar& operator+=(const Scalar& y) { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.d_ == y.d_ || x.b_ == 0);
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }
  friend bool operator<(const Scalar& x, const Scalar& y) { return (x - y).sign() < 0; }
  friend bool operator>(const Scalar& x, const Scalar& y) { return (x - y).sign() > 0; }
  friend bool operator<=(const Scalar& x, const Scalar& y) { return (x - y).sign() <= 0; }
  friend bool operator>=(const Scalar& x, const Scalar& y) { return (x - y).sign() >= 0; }

  double to_double() const;

  /// Canonical text form: "p/q" (or "p" for integers) when rational,
  /// "p/q+r/s*sqrt(d)" otherwise. Round-trips bit-exactly through parse().
  std::string str() const;
  static Scalar parse(const std::string& text);

 private:
  Rational a_, b_;
  unsigned d_;
};

inline Scalar sqrt_of(unsigned d) { return Scalar(Rational(0), Rational(1), d); }

}  // namespace pointhom
