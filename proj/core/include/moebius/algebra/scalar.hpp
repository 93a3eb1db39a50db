#pragma once

#include <optional>
#include <string>

#include <gmpxx.h>

#include "moebius/hp.hpp"

namespace moebius::algebra {

using Rational = mpq_class;

// Exact element p + q*sqrt(3) of Q(sqrt 3).
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : p_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational p) : p_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {}

  static Scalar sqrt3() { return {0, 1}; }
  static Scalar ratio(long num, long den);

  const Rational& rational_part() const { return p_; }
  const Rational& sqrt3_part() const { return q_; }

  bool is_zero() const { return p_ == 0 && q_ == 0; }
  bool is_rational() const { return q_ == 0; }
  int sign() const;

  Scalar inverse() const;
  Scalar conjugate() const { return {p_, -q_}; }
  // p^2 - 3 q^2
  Rational norm() const { return p_ * p_ - 3 * q_ * q_; }

  // Nonnegative square root when it lies in Q(sqrt 3).
  std::optional<Scalar> exact_sqrt() const;

  double to_double() const;
  hp::Real to_hp() const;
  std::string str() const;

  Scalar operator-() const { return {-p_, -q_}; }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.p_ == b.p_ && a.q_ == b.q_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  friend bool operator<(const Scalar& a, const Scalar& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

 private:
  Rational p_{0};
  Rational q_{0};
};

int scalar_sign(const Scalar& x);

// Exact rational square root if x is the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& x);

Rational parse_rational(const std::string& text);

}  // namespace moebius::algebra
