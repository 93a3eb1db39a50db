#pragma once

#include <string>
#include <utility>
#include <vector>

#include "moebius/algebra/scalar.hpp"

namespace moebius::algebra {

// Univariate polynomial over Q(sqrt 3), coefficients in ascending degree.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Scalar> coeffs);
  Poly(Scalar c);  // NOLINT(google-explicit-constructor)

  static Poly x() { return Poly({Scalar(0), Scalar(1)}); }
  static Poly monomial(Scalar c, int degree);
  // x - r
  static Poly linear_root(const Scalar& r) { return Poly({-r, Scalar(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(int i) const;
  const Scalar& leading() const;

  Scalar operator()(const Scalar& x) const;
  hp::Real eval(const hp::Real& x) const;
  double eval(double x) const;

  Poly derivative() const;
  Poly monic() const;
  // p(a x + b)
  Poly compose_linear(const Scalar& a, const Scalar& b) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::string str(char var = 'b') const;

 private:
  void trim();
  std::vector<Scalar> c_;
};

// Euclidean division a = q b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly gcd(Poly a, Poly b);
// a and b differ by a nonzero constant factor (mutual exact divisibility).
bool associated(const Poly& a, const Poly& b);

}  // namespace moebius::algebra
