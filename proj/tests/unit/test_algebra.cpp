#include <random>

#include <gtest/gtest.h>

#include "moebius/algebra.hpp"
#include "moebius/certificates.hpp"
#include "moebius/errors.hpp"
#include "moebius/slope_domain.hpp"
#include "oracle.hpp"

using namespace moebius;
using algebra::MPoly;
using algebra::Poly;
using algebra::RadicalExpr;
using algebra::Rational;
using algebra::Scalar;

namespace {

Scalar random_scalar(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> n(-40, 40), d(1, 9);
  Rational p(n(rng), d(rng)), q(n(rng), d(rng));
  p.canonicalize();
  q.canonicalize();
  return {p, q};
}

Poly random_poly(std::mt19937_64& rng, int degree) {
  std::vector<Scalar> c;
  for (int i = 0; i <= degree; ++i) c.push_back(random_scalar(rng));
  return Poly(c);
}

Poly x2_minus(long k) { return Poly({Scalar(-k), Scalar(0), Scalar(1)}); }

}  // namespace

// ---- Scalar ----------------------------------------------------------------

TEST(Scalar, SignExamples) {
  EXPECT_EQ(algebra::scalar_sign(Scalar(2) - Scalar::sqrt3()), 1);
  EXPECT_EQ(algebra::scalar_sign(Scalar::sqrt3() - Scalar(2)), -1);
  EXPECT_EQ(algebra::scalar_sign(Scalar(80) * Scalar::sqrt3() - Scalar(79)), 1);
  EXPECT_EQ(algebra::scalar_sign(Scalar(0)), 0);
}

TEST(Scalar, SignAgreesWithHighPrecision) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    Scalar x = random_scalar(rng);
    hp::Real v = x.to_hp();
    int expect = v > 0 ? 1 : (v < 0 ? -1 : 0);
    EXPECT_EQ(x.sign(), expect) << x.str();
  }
}

TEST(Scalar, InverseRoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    Scalar x = random_scalar(rng);
    if (x.is_zero()) continue;
    EXPECT_EQ(x * x.inverse(), Scalar(1));
  }
}

TEST(Scalar, FieldLaws) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 500; ++i) {
    Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(Scalar, ExactSqrt) {
  // 7 - 4 sqrt3 = (2 - sqrt3)^2
  auto r = Scalar(7, -4).exact_sqrt();
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(*r, Scalar(2, -1));
  EXPECT_FALSE(Scalar(2).exact_sqrt().has_value());
}

// ---- Poly ------------------------------------------------------------------

TEST(Poly, LeadingCoefficientNonzero) {
  Poly p({Scalar(1), Scalar(2), Scalar(0)});
  EXPECT_EQ(p.degree(), 1);
  Poly z = p - p;
  EXPECT_TRUE(z.is_zero());
}

TEST(Poly, DerivativeLinearity) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    Poly p = random_poly(rng, 6), q = random_poly(rng, 4);
    EXPECT_EQ((p + q).derivative(), p.derivative() + q.derivative());
  }
}

TEST(Poly, DivmodReconstructs) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 100; ++i) {
    Poly a = random_poly(rng, 7), b = random_poly(rng, 3);
    auto [q, r] = algebra::divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(Poly, Associated) {
  Poly p = x2_minus(3);
  EXPECT_TRUE(algebra::associated(p * Poly(Scalar(0, 5)), p));
  EXPECT_FALSE(algebra::associated(p, x2_minus(2)));
}

// ---- Sturm -----------------------------------------------------------------

TEST(Sturm, ZeroPolynomialThrows) {
  EXPECT_THROW(algebra::sturm_count(Poly(), Scalar(0), Scalar(1)), ZeroPolynomial);
}

TEST(Sturm, QuadraticOnLeftInterval) { EXPECT_EQ(algebra::sturm_count(x2_minus(1), Scalar(-2), Scalar(0)), 1u); }

TEST(Sturm, DegreeEightHasNoRootInRange) {
  EXPECT_EQ(algebra::sturm_count(cert::printed_degree8(), Scalar(0), Scalar(Rational(1, 2))), 0u);
}

TEST(Sturm, QuarticHasNoRootInRange) {
  EXPECT_EQ(algebra::sturm_count(cert::printed_quartic(), Scalar(0), Scalar(Rational(1, 2))), 0u);
}

TEST(Sturm, EndpointRootsDividedOutAndLogged) {
  algebra::EvidenceLog log;
  // roots -1, 1: (−1, 1] holds exactly the root at 1
  EXPECT_EQ(algebra::sturm_count(x2_minus(1), Scalar(-1), Scalar(1), &log), 1u);
  EXPECT_FALSE(log.lines.empty());
}

TEST(Isolate, SqrtThree) {
  auto iv = algebra::isolate_roots(x2_minus(3), Rational(0), Rational(2), Rational(1, 10000));
  ASSERT_EQ(iv.size(), 1u);
  EXPECT_LE(iv[0].hi - iv[0].lo, Rational(1, 10000));
  EXPECT_LT(iv[0].lo.get_d(), 1.7320508075688772);
  EXPECT_GE(iv[0].hi.get_d(), 1.7320508075688772);
}

TEST(Isolate, DegreeEightNearestRoot) {
  auto iv = algebra::isolate_roots(cert::printed_degree8(), Rational(0), Rational(1), Rational(1, 100000));
  ASSERT_EQ(iv.size(), 1u);
  EXPECT_LT(iv[0].lo.get_d(), 0.624325);
  EXPECT_GE(iv[0].hi.get_d(), 0.624325);
}

TEST(Isolate, QuarticNegativeRootsAsStated) {
  // The stated inventory is two negative roots; see the companion test below
  // for what the polynomial actually has.
  auto iv = algebra::isolate_roots(cert::printed_quartic(), Rational(-10), Rational(0), Rational(1, 1000));
  EXPECT_EQ(iv.size(), 2u);
}

TEST(Isolate, QuarticRootInventoryAgreesWithOracle) {
  Poly q = cert::printed_quartic();
  EXPECT_EQ(oracle::count(q, Rational(-10), Rational(0)), 1u);
  EXPECT_EQ(oracle::count(q, Rational(0), Rational(10)), 1u);
  EXPECT_EQ(algebra::sturm_count(q, Scalar(-10), Scalar(0)), 1u);
  EXPECT_EQ(algebra::real_root_count(q), 2u);
}

TEST(Isolate, IntervalsAreCertified) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 50; ++i) {
    auto c = oracle::random_case(rng);
    auto iv = algebra::isolate_roots(c.p, c.lo, c.hi, Rational(1, 1024));
    EXPECT_EQ(iv.size(), algebra::sturm_count(c.p, Scalar(c.lo), Scalar(c.hi)));
    for (const auto& r : iv) {
      EXPECT_LE(r.hi - r.lo, Rational(1, 1024));
      EXPECT_EQ(algebra::sturm_count(c.p, Scalar(r.lo), Scalar(r.hi)), 1u);
    }
  }
}

TEST(Sturm, OracleEquivalence) {
  std::mt19937_64 rng(20240601);
  int agree = 0;
  for (int i = 0; i < 500; ++i) {
    auto c = oracle::random_case(rng);
    std::size_t s = algebra::sturm_count(c.p, Scalar(c.lo), Scalar(c.hi));
    std::size_t o = oracle::count(c.p, c.lo, c.hi);
    EXPECT_EQ(s, o) << c.p.str() << " on (" << c.lo << ", " << c.hi << "]";
    agree += s == o;
  }
  EXPECT_EQ(agree, 500);
}

// ---- MPoly and parsing -------------------------------------------------------

TEST(MPoly, ParseAndEvaluate) {
  MPoly p = algebra::parse_mpoly("27 t^2 + 18 sqrt3 t + 9");
  Scalar t = -Scalar(0, Rational(1, 3));  // -1/sqrt3
  EXPECT_TRUE(p.evaluate({Scalar(0), t}).is_zero());
}

TEST(MPoly, DerivativeAndSubstitution) {
  MPoly p = MPoly::b() * MPoly::t().pow(3);
  EXPECT_EQ(p.derivative(1).derivative(1).derivative(1), MPoly(Scalar(6)) * MPoly::b());
  MPoly line = MPoly(Scalar(Rational(2, 3))) * MPoly::b() - MPoly(Scalar(Rational(1, 2)));
  Poly r = p.substitute(1, line).to_poly(0);
  EXPECT_EQ(r.degree(), 4);
}

// ---- Radical elimination -----------------------------------------------------

TEST(Eliminate, SquareCompletion) {
  RadicalExpr e = RadicalExpr::b() + sqrt(RadicalExpr(4));
  Poly p = algebra::eliminate_radicals(e).univariate();
  // Either x + 2 directly or its product with the conjugate x - 2.
  EXPECT_TRUE(algebra::associated(p, x2_minus(4)) ||
              algebra::associated(p, Poly({Scalar(2), Scalar(1)})))
      << p.str();
  EXPECT_TRUE(p(Scalar(-2)).is_zero());
}

TEST(Eliminate, XBoundReproducesDegreeEight) {
  RadicalExpr b = RadicalExpr::b();
  RadicalExpr t = RadicalExpr(Scalar(Rational(2, 3))) * b - RadicalExpr(Scalar(Rational(1, 2)));
  auto e = algebra::eliminate_radicals(slope::x_bound_expr(b, t, Scalar(Rational(1, 18))));
  Poly p = e.univariate();
  EXPECT_EQ(p.degree(), 8);
  EXPECT_TRUE(algebra::associated(p, cert::printed_degree8()));
  EXPECT_EQ(cert::printed_degree8().coeff(0), Scalar(Rational(mpz_class("379204871936"))));
  EXPECT_EQ(cert::printed_degree8().coeff(1), Scalar(Rational(mpz_class("-2821217402880"))));
}

TEST(Eliminate, YBoundReproducesQuartic) {
  RadicalExpr b = RadicalExpr::b();
  RadicalExpr t = RadicalExpr(Scalar(Rational(2, 3))) * b - RadicalExpr(Scalar(Rational(1, 2)));
  auto e = algebra::eliminate_radicals(slope::y_bound_expr(b, t, Scalar(Rational(1, 30))));
  EXPECT_TRUE(algebra::associated(e.univariate(), cert::printed_quartic()));
  EXPECT_GE(e.rounds, 1);
}

TEST(Eliminate, SoundnessAtRandomZeros) {
  // e(b) = sqrt(b^2 + p) + q sqrt(b + r) - s b - u on b in [0, 2]; every zero
  // of e must be a zero of the eliminated polynomial.
  hp::ensure_precision();
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> k(1, 9);
  int checked = 0;
  for (int trial = 0; trial < 10000 && checked < 1000; ++trial) {
    Scalar p(Rational(k(rng), 4)), q(Rational(k(rng) - 5, 3)), r(Rational(k(rng), 2)), s(Rational(k(rng), 3)),
        u(Rational(k(rng), 5));
    RadicalExpr b = RadicalExpr::b();
    RadicalExpr e = sqrt(b * b + RadicalExpr(p)) + RadicalExpr(q) * sqrt(b + RadicalExpr(r)) - RadicalExpr(s) * b -
                    RadicalExpr(u);
    auto f = [&](const hp::Real& x) { return e.evaluate(x, hp::Real(0)); };
    Poly poly;
    bool have_poly = false;
    const int n = 64;
    for (int i = 0; i < n; ++i) {
      hp::Real lo = hp::Real(2) * i / n, hi = hp::Real(2) * (i + 1) / n;
      if ((f(lo) > 0) == (f(hi) > 0)) continue;
      for (int it = 0; it < 120; ++it) {
        hp::Real m = (lo + hi) / 2;
        if ((f(m) > 0) == (f(lo) > 0)) lo = m; else hi = m;
      }
      if (!have_poly) {
        poly = algebra::eliminate_radicals(e).univariate();
        have_poly = true;
      }
      hp::Real x = (lo + hi) / 2;
      ASSERT_LT(abs(f(x)), hp::Real("1e-10"));
      hp::Real scale = 0, xp = 1;
      for (const auto& c : poly.coeffs()) {
        scale += abs(c.to_hp()) * xp;
        xp *= abs(x) + 1;
      }
      EXPECT_LT(abs(poly.eval(x)) / scale, hp::Real("1e-6"));
      ++checked;
    }
  }
  EXPECT_EQ(checked, 1000);
}

// ---- Interval --------------------------------------------------------------

TEST(Interval, Encloses) {
  algebra::Interval x(0.1, 0.2), y(-0.3, 0.4);
  auto z = x * y + sqrt(x) - square(y);
  for (double a : {0.1, 0.15, 0.2}) {
    for (double b : {-0.3, 0.0, 0.4}) {
      double v = a * b + std::sqrt(a) - b * b;
      EXPECT_TRUE(z.contains(v));
    }
  }
  EXPECT_THROW(x / y, std::domain_error);
}
