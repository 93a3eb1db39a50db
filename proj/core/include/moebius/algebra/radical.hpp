#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "moebius/algebra/mpoly.hpp"

namespace moebius::algebra {

enum class Var { b = 0, t = 1 };

struct Elimination;
class RadicalExpr;
Elimination eliminate_radicals(const RadicalExpr& e);

// Expression tree built from constants, b, t, +, *, / and sqrt.
class RadicalExpr {
 public:
  enum class Kind { constant, variable, sum, product, quotient, sqrt };

  RadicalExpr(Scalar c);  // NOLINT(google-explicit-constructor)
  RadicalExpr(long c) : RadicalExpr(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  static RadicalExpr variable(Var v);
  static RadicalExpr b() { return variable(Var::b); }
  static RadicalExpr t() { return variable(Var::t); }

  Kind kind() const;
  std::size_t sqrt_count() const;

  friend RadicalExpr operator+(const RadicalExpr& a, const RadicalExpr& b);
  friend RadicalExpr operator-(const RadicalExpr& a, const RadicalExpr& b);
  friend RadicalExpr operator*(const RadicalExpr& a, const RadicalExpr& b);
  friend RadicalExpr operator/(const RadicalExpr& a, const RadicalExpr& b);
  friend RadicalExpr sqrt(const RadicalExpr& a);
  RadicalExpr operator-() const;

  RadicalExpr substitute(Var v, const RadicalExpr& value) const;

  double evaluate(double b, double t) const;
  hp::Real evaluate(const hp::Real& b, const hp::Real& t) const;
  // Exact value when every square root taken lands in Q(sqrt 3).
  std::optional<Scalar> evaluate_exact(const Scalar& b, const Scalar& t) const;

  // Minimum radicand value over the given (b, t) samples.
  double min_radicand(const std::vector<std::pair<double, double>>& samples) const;

  std::string str() const;

  struct Node;

 private:
  explicit RadicalExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
  friend struct EliminationBuilder;
  friend Elimination eliminate_radicals(const RadicalExpr& e);
};

struct Elimination {
  MPoly polynomial;
  int rounds = 0;
  std::vector<std::string> log;
  Poly univariate() const { return polynomial.to_poly(0); }
};

// Repeatedly rewrites A + B sqrt(C) as A^2 - B^2 C (outermost radical first)
// on the numerator. Every real zero of the expression is a zero of the result.
Elimination eliminate_radicals(const RadicalExpr& e);

}  // namespace moebius::algebra
