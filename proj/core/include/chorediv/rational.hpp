#pragma once

#include <cstdint>
#include <string>

#include "chorediv/model.hpp"

namespace chorediv {

/// Exact rational over 128-bit integers, always normalized (gcd-reduced,
/// positive denominator). Every operation is overflow-checked and throws
/// ArithmeticError instead of wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value) : num_(value) {}  // NOLINT: implicit by intent
  Rational(Wide num, Wide den);

  Wide num() const { return num_; }
  Wide den() const { return den_; }

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  Rational operator-() const;

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num_ == y.num_ && x.den_ == y.den_;
  }
  friend bool operator<(const Rational& x, const Rational& y);
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator<=(const Rational& x, const Rational& y) {
    return !(y < x);
  }
  friend bool operator>=(const Rational& x, const Rational& y) {
    return !(x < y);
  }

  std::string str() const;

 private:
  Wide num_ = 0;
  Wide den_ = 1;
};

Rational min(const Rational& x, const Rational& y);

std::string to_string(Wide value);

}  // namespace chorediv
