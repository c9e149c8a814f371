#ifndef MONOUNION_RATIONAL_HPP_
#define MONOUNION_RATIONAL_HPP_

#include <cstdint>
#include <numeric>
#include <string>

#include "monounion/errors.hpp"

namespace monounion {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    throw ExponentOverflow("64-bit overflow in addition");
  }
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    throw ExponentOverflow("64-bit overflow in subtraction");
  }
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    throw ExponentOverflow("64-bit overflow in multiplication");
  }
  return r;
}

// Exact rational on checked 64-bit integers. Always normalized: denominator
// positive, numerator and denominator coprime. Comparisons never overflow
// (128-bit cross multiplication); arithmetic that would leave the 64-bit
// range throws instead of wrapping.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit on purpose
  Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    std::int64_t g = std::gcd(a.den_, b.den_);
    std::int64_t lhs = checked_mul(a.num_, b.den_ / g);
    std::int64_t rhs = checked_mul(b.num_, a.den_ / g);
    return Rational(checked_add(lhs, rhs), checked_mul(a.den_ / g, b.den_));
  }

  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(checked_sub(0, b.num_), b.den_);
  }

  friend Rational operator*(const Rational& a, const Rational& b) {
    std::int64_t g1 = std::gcd(abs64(a.num_), b.den_);
    std::int64_t g2 = std::gcd(abs64(b.num_), a.den_);
    return Rational(checked_mul(a.num_ / g1, b.num_ / g2),
                    checked_mul(a.den_ / g2, b.den_ / g1));
  }

  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw Error(ErrorCode::InvalidSpec, "division by zero");
    return a * Rational(b.den_, b.num_);
  }

  // Round toward +infinity / -infinity.
  std::int64_t ceil() const {
    std::int64_t q = num_ / den_;
    return (num_ % den_ > 0) ? q + 1 : q;
  }
  std::int64_t floor() const {
    std::int64_t q = num_ / den_;
    return (num_ % den_ < 0) ? q - 1 : q;
  }

  // "3/2"; whole numbers keep the denominator, e.g. "2/1", so serialized
  // values are uniform.
  std::string str() const {
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  double approx() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

 private:
  static std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

  void normalize() {
    if (den_ == 0) throw Error(ErrorCode::InvalidSpec, "zero denominator");
    if (den_ < 0) {
      num_ = checked_sub(0, num_);
      den_ = checked_sub(0, den_);
    }
    std::int64_t g = std::gcd(abs64(num_), den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace monounion

#endif  // MONOUNION_RATIONAL_HPP_
