#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

#include "judicious/errors.hpp"

namespace judicious {

// Exact rational with a positive denominator, kept in lowest terms.
//
// Every threshold comparison in this library goes through this class: a
// coverage count d is tested against a bound p/q as d*q vs p, with 128-bit
// intermediates.  Nothing is ever rounded through floating point.
class Rational {
public:
  constexpr Rational() = default;

  Rational(std::int64_t num, std::int64_t den) { assign(num, den); }

  static Rational integer(std::int64_t v) { return Rational(v, 1); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  // Smallest integer >= *this.  Only defined for non-negative values.
  std::int64_t ceil() const {
    if (num_ < 0) throw input_error("Rational::ceil: value is negative");
    return (num_ + den_ - 1) / den_;
  }

  Rational operator+(const Rational& o) const {
    return make(i128(num_) * o.den_ + i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Rational operator-(const Rational& o) const {
    return make(i128(num_) * o.den_ - i128(o.num_) * den_, i128(den_) * o.den_);
  }
  Rational operator*(const Rational& o) const {
    return make(i128(num_) * o.num_, i128(den_) * o.den_);
  }
  Rational operator*(std::int64_t k) const { return make(i128(num_) * k, den_); }
  Rational operator/(std::int64_t k) const {
    if (k == 0) throw input_error("Rational: division by zero");
    return make(num_, i128(den_) * k);
  }

  friend Rational operator*(std::int64_t k, const Rational& r) { return r * k; }

  friend bool operator==(const Rational& a, const Rational& b) = default;

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(i128(a.num_) * b.den_, i128(b.num_) * a.den_);
  }

  friend bool operator==(const Rational& a, std::int64_t v) {
    return a.den_ == 1 && a.num_ == v;
  }
  friend std::strong_ordering operator<=>(const Rational& a, std::int64_t v) {
    return cmp(i128(a.num_), i128(v) * a.den_);
  }

  // "p/q", or just "p" for integers.
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

private:
  using i128 = __int128;

  static std::strong_ordering cmp(i128 a, i128 b) {
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  static Rational make(i128 n, i128 d) {
    if (d == 0) throw input_error("Rational: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 a = n < 0 ? -n : n;
    i128 g = 1;
    // gcd on 128-bit magnitudes
    {
      i128 x = a, y = d;
      while (y != 0) { i128 t = x % y; x = y; y = t; }
      g = x == 0 ? 1 : x;
    }
    n /= g;
    d /= g;
    constexpr i128 lo = -i128(INT64_MAX) - 1, hi = i128(INT64_MAX);
    if (n < lo || n > hi || d > hi)
      throw error("Rational: value does not fit 64-bit storage");
    Rational r;
    r.num_ = static_cast<std::int64_t>(n);
    r.den_ = static_cast<std::int64_t>(d);
    return r;
  }

  void assign(std::int64_t num, std::int64_t den) {
    if (den == 0) throw input_error("Rational: zero denominator");
    *this = make(num, den);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace judicious
