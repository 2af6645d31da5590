#include "pointhom/scalar.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace pointhom {

namespace {

bool is_squarefree(unsigned d) {
  for (unsigned p = 2; p * p <= d; ++p) {
    if (d % (p * p) == 0) return false;
  }
  return true;
}

int rational_sign(const Rational& r) {
  if (r == 0) return 0;
  return r < 0 ? -1 : 1;
}

}  // namespace

std::string rational_to_string(const Rational& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << "/" << denominator(r);
  return out.str();
}

Rational rational_from_string(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in rational: " + text);
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw ParseError("cannot parse rational '" + text + "': " + e.what());
  }
}

double rational_to_double(const Rational& r) {
  return r.convert_to<double>();
}

Scalar::Scalar(Rational a, Rational b, unsigned d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
  if (d_ == 1) {  // sqrt(1) folds into the rational part
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
  if (d_ == 0) {
    b_ = 0;
  } else if (!is_squarefree(d_)) {
    throw ParamError("radicand must be squarefree: " + std::to_string(d_));
  }
  if (b_ == 0) d_ = 0;
}

int Scalar::sign() const {
  const int sa = rational_sign(a_);
  const int sb = rational_sign(b_);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: compare a^2 with b^2 * d.
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * d_;
  if (lhs == rhs) return 0;  // cannot happen for squarefree d > 1, kept for safety
  const bool rational_dominates = lhs > rhs;
  return rational_dominates ? sa : sb;
}

namespace {

unsigned merged_radicand(const Scalar& x, const Scalar& y) {
  if (x.is_rational()) return y.radicand();
  if (y.is_rational()) return x.radicand();
  if (x.radicand() != y.radicand()) {
    throw RadicandMismatch("incompatible radicands " + std::to_string(x.radicand()) +
                           " and " + std::to_string(y.radicand()));
  }
  return x.radicand();
}

}  // namespace

Scalar operator+(const Scalar& x, const Scalar& y) {
  const unsigned d = merged_radicand(x, y);
  return Scalar(x.a_ + y.a_, x.b_ + y.b_, d);
}

Scalar operator-(const Scalar& x, const Scalar& y) {
  const unsigned d = merged_radicand(x, y);
  return Scalar(x.a_ - y.a_, x.b_ - y.b_, d);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  const unsigned d = merged_radicand(x, y);
  // (a1 + b1 s)(a2 + b2 s) = a1 a2 + b1 b2 d + (a1 b2 + a2 b1) s,  s = sqrt(d)
  return Scalar(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + y.a_ * x.b_, d);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (d_ == 0) return Scalar(Rational(1) / a_);
  // 1/(a + b s) = (a - b s)/(a^2 - b^2 d)
  const Rational norm = a_ * a_ - b_ * b_ * d_;
  if (norm == 0) throw DivisionByZero("zero field norm");  // impossible for squarefree d
  return Scalar(a_ / norm, -b_ / norm, d_);
}

double Scalar::to_double() const {
  double v = rational_to_double(a_);
  if (b_ != 0) v += rational_to_double(b_) * std::sqrt(static_cast<double>(d_));
  return v;
}

std::string Scalar::str() const {
  if (b_ == 0) return rational_to_string(a_);
  std::ostringstream out;
  out << rational_to_string(a_);
  if (b_ > 0) out << "+";
  out << rational_to_string(b_) << "*sqrt(" << d_ << ")";
  return out.str();
}

Scalar Scalar::parse(const std::string& text) {
  auto sqrt_pos = text.find("*sqrt(");
  if (sqrt_pos == std::string::npos) {
    return Scalar(rational_from_string(text));
  }
  if (text.back() != ')') throw ParseError("malformed scalar: " + text);
  const std::string d_text = text.substr(sqrt_pos + 6, text.size() - sqrt_pos - 7);
  unsigned long d = std::strtoul(d_text.c_str(), nullptr, 10);
  // Split "A+B" / "A-B" at the sign starting the surd coefficient; the split
  // point is the last '+' or '-' before sqrt_pos that is not a leading sign.
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < sqrt_pos; ++i) {
    if ((text[i] == '+' || text[i] == '-') && text[i - 1] != '/' && text[i - 1] != '+' &&
        text[i - 1] != '-') {
      split = i;
    }
  }
  if (split == std::string::npos) throw ParseError("malformed scalar: " + text);
  Rational a = rational_from_string(text.substr(0, split));
  std::string b_text = text.substr(split, sqrt_pos - split);
  if (!b_text.empty() && b_text[0] == '+') b_text = b_text.substr(1);
  Rational b = rational_from_string(b_text);
  return Scalar(std::move(a), std::move(b), static_cast<unsigned>(d));
}

}  // namespace pointhom
