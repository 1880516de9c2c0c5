#include "chorediv/rational.hpp"

#include <algorithm>

#include "chorediv/errors.hpp"

namespace chorediv {

namespace {

Wide mul(Wide x, Wide y) {
  Wide out = 0;
  if (__builtin_mul_overflow(x, y, &out)) {
    throw ArithmeticError("rational arithmetic overflow");
  }
  return out;
}

Wide add(Wide x, Wide y) {
  Wide out = 0;
  if (__builtin_add_overflow(x, y, &out)) {
    throw ArithmeticError("rational arithmetic overflow");
  }
  return out;
}

Wide gcd(Wide x, Wide y) {
  if (x < 0) x = -x;
  if (y < 0) y = -y;
  while (y != 0) {
    const Wide t = x % y;
    x = y;
    y = t;
  }
  return x;
}

}  // namespace

Rational::Rational(Wide num, Wide den) {
  if (den == 0) throw ArithmeticError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const Wide g = gcd(num, den);
  num_ = g == 0 ? 0 : num / g;
  den_ = g == 0 ? 1 : den / g;
}

Rational operator+(const Rational& x, const Rational& y) {
  return {add(mul(x.num_, y.den_), mul(y.num_, x.den_)), mul(x.den_, y.den_)};
}

Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

Rational operator*(const Rational& x, const Rational& y) {
  // Cross-reduce first to keep intermediates small.
  const Wide g1 = std::max<Wide>(gcd(x.num_, y.den_), 1);
  const Wide g2 = std::max<Wide>(gcd(y.num_, x.den_), 1);
  return {mul(x.num_ / g1, y.num_ / g2), mul(x.den_ / g2, y.den_ / g1)};
}

Rational operator/(const Rational& x, const Rational& y) {
  if (y.num_ == 0) throw ArithmeticError("rational division by zero");
  return x * Rational(y.den_, y.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

bool operator<(const Rational& x, const Rational& y) {
  return mul(x.num_, y.den_) < mul(y.num_, x.den_);
}

Rational min(const Rational& x, const Rational& y) { return y < x ? y : x; }

std::string to_string(Wide value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  std::string digits;
  while (value != 0) {
    const int digit = static_cast<int>(value % 10);
    digits.push_back(static_cast<char>('0' + (digit < 0 ? -digit : digit)));
    value /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

std::string Rational::str() const {
  if (den_ == 1) return to_string(num_);
  return to_string(num_) + "/" + to_string(den_);
}

}  // namespace chorediv
