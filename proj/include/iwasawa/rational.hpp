#pragma once

#include <compare>
#include <numeric>
#include <string>

#include "iwasawa/error.hpp"

namespace iwasawa {

/// Exact fraction, always in lowest terms with a positive denominator.
/// Components are 64-bit with 128-bit intermediates; anything that would
/// not reduce back into 64 bits throws NumericOverflow instead of losing
/// exactness. The lattice caps keep every value in this project far below
/// that bound.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}
  Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) fail(ErrorKind::NumericOverflow, "division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  bool operator==(const Rational& o) const = default;
  std::strong_ordering operator<=>(const Rational& o) const {
    i128 lhs = i128(num_) * o.den_, rhs = i128(o.num_) * den_;
    return lhs < rhs ? std::strong_ordering::less
           : lhs > rhs ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
  }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

 private:
  using i128 = __int128;

  static Rational make(i128 n, i128 d) {
    if (d == 0) fail(ErrorKind::NumericOverflow, "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    i128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr i128 kMax = 0x7fffffffffffffffLL;
    if (n > kMax || n < -kMax || d > kMax)
      fail(ErrorKind::NumericOverflow, "rational does not fit in 64 bits");
    Rational r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  static i128 gcd128(i128 a, i128 b) {
    while (b) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  void normalize() { *this = make(num_, den_); }

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace iwasawa
