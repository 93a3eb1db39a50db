#pragma once

#include <map>
#include <string>
#include <vector>

#include "moebius/algebra/poly.hpp"

namespace moebius::algebra {

// Sparse polynomial over Q(sqrt 3). Variable 0 is b, variable 1 is t;
// higher indices are used internally for radical symbols.
class MPoly {
 public:
  using Exponents = std::vector<int>;  // trailing zeros trimmed

  MPoly() = default;
  MPoly(Scalar c);  // NOLINT(google-explicit-constructor)
  static MPoly var(int index, int power = 1);
  static MPoly b() { return var(0); }
  static MPoly t() { return var(1); }
  static MPoly from_poly(const Poly& p, int index = 0);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  int degree_in(int index) const;
  int total_degree() const;
  int max_var() const;  // -1 for constants
  Scalar constant_term() const;

  void add_term(Exponents e, const Scalar& c);

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(int n) const;
  MPoly derivative(int index) const;
  // Coefficients of index^k, k = 0..degree_in(index).
  std::vector<MPoly> split(int index) const;
  MPoly substitute(int index, const MPoly& value) const;

  // Univariate view; throws std::invalid_argument if another variable occurs.
  Poly to_poly(int index = 0) const;

  Scalar evaluate(const std::vector<Scalar>& values) const;
  hp::Real evaluate(const std::vector<hp::Real>& values) const;

  std::string str() const;

 private:
  static void trim(Exponents& e);
  std::map<Exponents, Scalar> terms_;
};

// a == k * b for a nonzero scalar k; returns k through the pointer when true.
bool scalar_multiple(const MPoly& a, const MPoly& b, Scalar* factor = nullptr);

// Parses b, t, sqrt3 (or √3), integers, decimals, + - * / ^ and parentheses;
// juxtaposition multiplies. Division only by constants.
MPoly parse_mpoly(const std::string& text);
Poly parse_poly(const std::string& text);

}  // namespace moebius::algebra
