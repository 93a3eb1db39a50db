#pragma once

// Independent root counting for checking Sturm counts: recursive isolation
// through the critical points of p, then bisection on each monotone piece,
// all in high-precision floating point. Roots closer than 1e-8 are merged,
// since a root of multiplicity k is only located to about eps^(1/k).

#include <algorithm>
#include <random>
#include <vector>

#include "moebius/algebra.hpp"
#include "moebius/hp.hpp"

namespace oracle {

using moebius::algebra::Poly;
using moebius::algebra::Rational;
using moebius::algebra::Scalar;
using moebius::hp::Real;

inline int sgn(const Real& v, const Real& tiny) { return v > tiny ? 1 : (v < -tiny ? -1 : 0); }

// Distinct roots of p in (lo, hi), excluding the endpoints themselves.
inline std::vector<Real> open_roots(const Poly& p, const Real& lo, const Real& hi) {
  std::vector<Real> out;
  if (p.degree() <= 0) return out;
  const Real tiny = boost::multiprecision::pow(Real(10), -24);
  std::vector<Real> cuts{lo};
  for (const Real& c : open_roots(p.derivative(), lo, hi)) cuts.push_back(c);
  cuts.push_back(hi);
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    Real u = cuts[k], v = cuts[k + 1];
    // A critical point where p vanishes is a multiple root.
    if (k > 0 && sgn(p.eval(u), tiny) == 0) out.push_back(u);
    int su = sgn(p.eval(u), Real(0)), sv = sgn(p.eval(v), Real(0));
    if (su * sv >= 0) continue;
    for (int it = 0; it < 200; ++it) {
      Real m = (u + v) / 2;
      int sm = sgn(p.eval(m), Real(0));
      if (sm == 0) { u = v = m; break; }
      if (sm == su) u = m; else v = m;
    }
    out.push_back((u + v) / 2);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(),
                        [&](const Real& a, const Real& b) { return abs(a - b) < Real("1e-8"); }),
            out.end());
  return out;
}

// Distinct roots in (lo, hi]; a root exactly at hi is detected exactly.
inline std::size_t count(const Poly& p, const Rational& lo, const Rational& hi) {
  moebius::hp::ensure_precision();
  Real l = moebius::hp::from_rational(lo), h = moebius::hp::from_rational(hi);
  // Drop roots that are numerically the endpoints.
  std::size_t n = 0;
  for (const Real& r : open_roots(p, l, h)) {
    if (abs(r - l) > Real("1e-8") && abs(r - h) > Real("1e-8")) ++n;
  }
  if (p(Scalar(hi)).is_zero()) ++n;
  return n;
}

struct Case {
  Poly p;
  Rational lo, hi;
};

// Integer polynomials of degree <= 8: a product of integer linear factors
// (so that repeated roots and endpoint roots occur) times a random integer
// cofactor.
inline Case random_case(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12), den(1, 4), coef(-9, 9), lin(0, 4), extra(0, 3);
  Poly p(Scalar(1));
  int k = lin(rng);
  std::vector<Rational> roots;
  for (int i = 0; i < k; ++i) {
    Rational r(num(rng), den(rng));
    r.canonicalize();
    // Sometimes repeat the previous root.
    if (!roots.empty() && coef(rng) > 6) r = roots.back();
    roots.push_back(r);
    p *= Poly({Scalar(Rational(-r.get_num())), Scalar(Rational(r.get_den()))});
  }
  int m = std::min(extra(rng), 8 - k);
  std::vector<Scalar> c;
  for (int i = 0; i <= m; ++i) c.emplace_back(coef(rng));
  if (c.back().is_zero()) c.back() = Scalar(1);
  p *= Poly(c);
  Rational a(num(rng), den(rng)), b(num(rng), den(rng));
  a.canonicalize();
  b.canonicalize();
  if (a == b) b += 1;
  if (b < a) std::swap(a, b);
  // Sometimes put an endpoint on a root.
  if (!roots.empty() && coef(rng) > 5) a = std::min(roots.front(), Rational(b - 1));
  if (!roots.empty() && coef(rng) > 5) b = std::max(roots.back(), Rational(a + 1));
  return {p, a, b};
}

}  // namespace oracle
