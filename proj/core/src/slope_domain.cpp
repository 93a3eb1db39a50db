#include "moebius/slope_domain.hpp"

#include <cmath>
#include <stdexcept>

namespace moebius::slope {

using hp::Real;

ConstraintValues eval_constraints(const SlopePair& s) { return eval_constraints<double>(s.b, s.t); }

ConstraintValuesHP eval_constraints_hp(const SlopePair& s) {
  hp::ensure_precision();
  return eval_constraints<Real>(Real(s.b), Real(s.t));
}

RadicalExpr B_expr(const RadicalExpr& b) { return sqrt(RadicalExpr(1) + b * b); }
RadicalExpr T_expr(const RadicalExpr& t) { return sqrt(RadicalExpr(1) + t * t); }

RadicalExpr f_expr(const RadicalExpr& b, const RadicalExpr& t) { return b - t + T_expr(t); }

RadicalExpr g_expr(const RadicalExpr& b, const RadicalExpr& t) {
  RadicalExpr B = B_expr(b);
  RadicalExpr T = T_expr(t);
  return t - b + sqrt(RadicalExpr(4) * B * B + T * T);
}

RadicalExpr psi_expr(const RadicalExpr& b, const RadicalExpr& t) {
  RadicalExpr T = T_expr(t);
  return (RadicalExpr(2) + b * b + t * t + b * T - t * T) / (b - t + T);
}

RadicalExpr psihat_expr(const RadicalExpr& b, const RadicalExpr& t) {
  return psi_expr(b, t) + b * (RadicalExpr(1) - RadicalExpr(2) * b) / RadicalExpr(3) -
         RadicalExpr(Scalar::sqrt3());
}

RadicalExpr x_bound_expr(const RadicalExpr& b, const RadicalExpr& t, const Scalar& x) {
  RadicalExpr B = B_expr(b);
  RadicalExpr T = T_expr(t);
  RadicalExpr bx = B + RadicalExpr(x);
  return T / RadicalExpr(2) + sqrt(bx * bx + T * T / RadicalExpr(4)) - RadicalExpr(Scalar::sqrt3());
}

RadicalExpr y_bound_expr(const RadicalExpr& b, const RadicalExpr& t, const Scalar& y) {
  RadicalExpr B = B_expr(b);
  RadicalExpr T = T_expr(t);
  RadicalExpr ty = T / RadicalExpr(2) + RadicalExpr(y);
  return sqrt(B * B + ty * ty) + ty - RadicalExpr(Scalar::sqrt3());
}

ExactConstraintValues eval_constraints_exact(const Scalar& b, const Scalar& t) {
  RadicalExpr rb(b);
  RadicalExpr rt(t);
  ExactConstraintValues v{B_expr(rb), T_expr(rt), f_expr(rb, rt), g_expr(rb, rt), RadicalExpr(0), psi_expr(rb, rt)};
  // Decide phi = max(f, g) exactly when both values are in Q(sqrt 3).
  auto fe = v.f.evaluate_exact(b, t);
  auto ge = v.g.evaluate_exact(b, t);
  bool f_wins;
  if (fe && ge) {
    f_wins = *fe >= *ge;
  } else {
    Real fb = v.f.evaluate(b.to_hp(), t.to_hp());
    Real gb = v.g.evaluate(b.to_hp(), t.to_hp());
    f_wins = fb >= gb;
  }
  v.phi = f_wins ? v.f : v.g;
  Scalar den_check = b - t;
  auto T = v.T.evaluate_exact(b, t);
  if (T && (den_check + *T).is_zero()) throw PsiPole();
  return v;
}

Real a_value() {
  hp::ensure_precision();
  return (boost::multiprecision::sqrt(Real(27)) - boost::multiprecision::sqrt(Real(11))) / 4;
}

algebra::Poly a_minimal_poly() {
  return algebra::Poly({Scalar(1), Scalar(0, Rational(-3, 2)), Scalar(1)});
}

bool le_a(const Scalar& b) {
  if (b.sign() <= 0) return true;
  // a is the smaller root of the minimal polynomial; the roots straddle 3 sqrt3 / 4.
  Scalar vertex(0, Rational(3, 4));
  return b <= vertex && a_minimal_poly()(b).sign() >= 0;
}

double df_dt(double, double t) { return -1 + t / std::sqrt(1 + t * t); }

double dg_dt(double b, double t) { return 1 + t / std::sqrt(5 + 4 * b * b + t * t); }

double dg_db(double b, double t) { return -1 + 4 * b / std::sqrt(5 + 4 * b * b + t * t); }

double dg_dt_printed(double b, double t) { return 1 + t / (5 + 5 * b * b + t * t); }

bool omega_contains(const SlopePair& s, double eps) {
  auto v = eval_constraints_hp(s);
  return v.phi < hp::sqrt3() + Real(eps);
}

namespace {

// x < y for x = sqrt(r) with r >= 0, exactly.
bool sqrt_less(const Scalar& radicand, const Scalar& rhs) {
  if (rhs.sign() <= 0) return false;
  return radicand < rhs * rhs;
}

}  // namespace

bool omega_contains(const Scalar& b, const Scalar& t, const Rational& eps) {
  Scalar c = Scalar::sqrt3() + Scalar(eps);
  // f < c  <=>  T < c - b + t
  if (!sqrt_less(Scalar(1) + t * t, c - b + t)) return false;
  // g < c  <=>  sqrt(4B^2 + T^2) < c + b - t
  return sqrt_less(Scalar(5) + Scalar(4) * b * b + t * t, c + b - t);
}

bool omegahat_contains(const SlopePair& s) {
  hp::ensure_precision();
  Real b(s.b), t(s.t);
  Real r3 = hp::sqrt3();
  if (b < 0 || b > a_value()) return false;
  Real two_thirds_b = Real(2) * b / 3;
  if (t < two_thirds_b - 1 / r3) return false;
  if (t > two_thirds_b - Real(1) / 2) return false;
  return t <= Real(4) * b / 3 - 1 / r3;
}

bool omegahat_contains(const SlopePair& s, double tol) {
  const double a = a_value().convert_to<double>();
  const double r3 = std::sqrt(3.0);
  if (s.b < -tol || s.b > a + tol) return false;
  if (s.t < 2 * s.b / 3 - 1 / r3 - tol) return false;
  if (s.t > 2 * s.b / 3 - 0.5 + tol) return false;
  return s.t <= 4 * s.b / 3 - 1 / r3 + tol;
}

bool omegahat_contains(const Scalar& b, const Scalar& t) {
  if (b.sign() < 0 || !le_a(b)) return false;
  Scalar inv_r3(0, Rational(1, 3));
  Scalar two_thirds_b = Scalar::ratio(2, 3) * b;
  if (t < two_thirds_b - inv_r3) return false;
  if (t > two_thirds_b - Scalar::ratio(1, 2)) return false;
  return t <= Scalar::ratio(4, 3) * b - inv_r3;
}

namespace {

template <class F>
Real bisect(F&& fn, Real lo, Real hi, int iterations) {
  // fn(lo) and fn(hi) have opposite signs.
  bool lo_pos = fn(lo) > 0;
  for (int i = 0; i < iterations; ++i) {
    Real mid = (lo + hi) / 2;
    if ((fn(mid) > 0) == lo_pos) lo = mid; else hi = mid;
  }
  return (lo + hi) / 2;
}

int iterations_for_precision() { return static_cast<int>(hp::precision_bits()) + 8; }

}  // namespace

Real t_on_f_level(const Real& b, const Real& c) {
  hp::ensure_precision();
  // f decreases in t from +inf to b.
  if (b >= c) throw std::domain_error("f level set empty for this b");
  auto fn = [&](const Real& t) { return b - t + boost::multiprecision::sqrt(1 + t * t) - c; };
  Real lo = -1, hi = 1;
  while (fn(lo) <= 0) lo *= 2;
  while (fn(hi) >= 0) hi *= 2;
  return bisect(fn, lo, hi, iterations_for_precision());
}

Real t_on_g_level(const Real& b, const Real& c) {
  hp::ensure_precision();
  // g increases in t from -b to +inf.
  if (-b >= c) throw std::domain_error("g level set empty for this b");
  auto fn = [&](const Real& t) { return t - b + boost::multiprecision::sqrt(5 + 4 * b * b + t * t) - c; };
  Real lo = -1, hi = 1;
  while (fn(lo) >= 0) lo *= 2;
  while (fn(hi) <= 0) hi *= 2;
  return bisect(fn, lo, hi, iterations_for_precision());
}

std::vector<SlopePair> sample_omega_boundary(int n, double eps) {
  if (n < 8) throw std::invalid_argument("sample_omega_boundary needs n >= 8");
  if (eps < 0) throw std::invalid_argument("eps must be nonnegative");
  hp::ensure_precision();
  Real c = hp::sqrt3() + Real(eps);
  // gap(b) = t_g - t_f is >= 0 exactly on the closure of the region's b-range.
  auto gap = [&](const Real& b) { return t_on_g_level(b, c) - t_on_f_level(b, c); };
  Real left, right;
  if (eps == 0) {
    left = 0;
    right = a_value();
  } else {
    Real lo = -1;
    while (gap(lo) >= 0) lo *= 2;
    left = bisect(gap, lo, Real(0), iterations_for_precision());
    Real hi = 1;
    while (gap(hi) >= 0) hi *= 2;
    right = bisect(gap, a_value(), hi, iterations_for_precision());
  }
  // Lower branch: m points including both vertices; upper branch: the
  // remaining n - m interior points.
  int m = n / 2 + 1;
  int k = n - m;
  std::vector<SlopePair> out;
  auto at = [&](int j, int count) {
    // Cosine spacing concentrates samples near the two vertices.
    Real u = (1 - boost::multiprecision::cos(hp::pi() * j / count)) / 2;
    return Real(left + (right - left) * u);
  };
  for (int i = 0; i < m; ++i) {
    Real b = at(i, m - 1);
    out.push_back({b.convert_to<double>(), t_on_f_level(b, c).convert_to<double>()});
  }
  for (int j = k; j >= 1; --j) {
    Real b = at(j, k + 1);
    out.push_back({b.convert_to<double>(), t_on_g_level(b, c).convert_to<double>()});
  }
  return out;
}

}  // namespace moebius::slope
