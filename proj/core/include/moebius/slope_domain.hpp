#pragma once

#include <vector>

#include "moebius/algebra.hpp"
#include "moebius/errors.hpp"
#include "moebius/hp.hpp"

namespace moebius::slope {

using algebra::RadicalExpr;
using algebra::Rational;
using algebra::Scalar;

struct SlopePair {
  double b = 0;
  double t = 0;
};

template <class R>
struct BasicConstraintValues {
  R B, T, f, g, phi, psi;
};
using ConstraintValues = BasicConstraintValues<double>;
using ConstraintValuesHP = BasicConstraintValues<hp::Real>;

// f = b - t + T, g = -b + t + sqrt(4B^2 + T^2), psi = (2 + b^2 + t^2 + bT - tT) / (b - t + T).
template <class R>
BasicConstraintValues<R> eval_constraints(const R& b, const R& t) {
  using std::sqrt;
  BasicConstraintValues<R> v;
  v.B = sqrt(R(1) + b * b);
  v.T = sqrt(R(1) + t * t);
  v.f = b - t + v.T;
  v.g = -b + t + sqrt(R(4) * v.B * v.B + v.T * v.T);
  v.phi = v.f > v.g ? v.f : v.g;
  R den = b - t + v.T;
  if (den == R(0)) throw PsiPole();
  v.psi = (R(2) + b * b + t * t + b * v.T - t * v.T) / den;
  return v;
}

ConstraintValues eval_constraints(const SlopePair& s);
ConstraintValuesHP eval_constraints_hp(const SlopePair& s);

// Exact mode: each field is a radical expression in the given Scalars.
struct ExactConstraintValues {
  RadicalExpr B, T, f, g, phi, psi;
};
ExactConstraintValues eval_constraints_exact(const Scalar& b, const Scalar& t);

// Expression builders over arbitrary (b, t) expressions.
RadicalExpr B_expr(const RadicalExpr& b);
RadicalExpr T_expr(const RadicalExpr& t);
RadicalExpr f_expr(const RadicalExpr& b, const RadicalExpr& t);
RadicalExpr g_expr(const RadicalExpr& b, const RadicalExpr& t);
RadicalExpr psi_expr(const RadicalExpr& b, const RadicalExpr& t);
// psi + b(1 - 2b)/3 - sqrt3
RadicalExpr psihat_expr(const RadicalExpr& b, const RadicalExpr& t);
// T/2 + sqrt((B + x)^2 + T^2/4) - sqrt3
RadicalExpr x_bound_expr(const RadicalExpr& b, const RadicalExpr& t, const Scalar& x);
// sqrt(B^2 + (T/2 + y)^2) + T/2 + y - sqrt3
RadicalExpr y_bound_expr(const RadicalExpr& b, const RadicalExpr& t, const Scalar& y);

// Right vertex abscissa a = (sqrt27 - sqrt11)/4, the smaller root of
// b^2 - (3 sqrt3 / 2) b + 1.
hp::Real a_value();
algebra::Poly a_minimal_poly();
bool le_a(const Scalar& b);  // exact test b <= a

// Partial derivatives (the derivative of g as defined).
double df_dt(double b, double t);
double dg_dt(double b, double t);
double dg_db(double b, double t);
// The form printed in the source text, kept for the discrepancy report.
double dg_dt_printed(double b, double t);

bool omega_contains(const SlopePair& s, double eps = 0);
bool omega_contains(const Scalar& b, const Scalar& t, const Rational& eps = Rational(0));
bool omegahat_contains(const SlopePair& s);
bool omegahat_contains(const Scalar& b, const Scalar& t);
// Each of the four inequalities relaxed by tol, for slopes measured on bands.
bool omegahat_contains(const SlopePair& s, double tol);

// Level sets f = c and g = c solved for t by bisection.
hp::Real t_on_f_level(const hp::Real& b, const hp::Real& c);
hp::Real t_on_g_level(const hp::Real& b, const hp::Real& c);

// Closed polyline around {phi < sqrt3 + eps}: lower branch (f level) left to
// right, then upper branch (g level) right to left.
std::vector<SlopePair> sample_omega_boundary(int n, double eps = 0);

}  // namespace moebius::slope
