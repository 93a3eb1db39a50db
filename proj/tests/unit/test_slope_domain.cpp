#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "moebius/example.hpp"
#include "moebius/slope_domain.hpp"

using namespace moebius;
using algebra::Rational;
using algebra::Scalar;
using slope::SlopePair;

namespace {

const double r3 = std::sqrt(3.0);
const double a_right = (std::sqrt(27.0) - std::sqrt(11.0)) / 4;

SlopePair random_in_trapezoid(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  for (;;) {
    SlopePair s{u(rng) * a_right, -1 / r3 + u(rng) * (1 / r3 - 0.18)};
    if (slope::omegahat_contains(s)) return s;
  }
}

// Even-odd test against a closed polyline.
bool inside(const std::vector<SlopePair>& poly, double b, double t) {
  bool in = false;
  for (std::size_t i = 0, j = poly.size() - 1; i < poly.size(); j = i++) {
    const auto &p = poly[i], &q = poly[j];
    if ((p.t > t) != (q.t > t) && b < (q.b - p.b) * (t - p.t) / (q.t - p.t) + p.b) in = !in;
  }
  return in;
}

}  // namespace

TEST(Constraints, VertexValues) {
  auto v = slope::eval_constraints(SlopePair{0, -1 / r3});
  EXPECT_NEAR(v.f, r3, 1e-12);
  EXPECT_NEAR(v.g, r3, 1e-12);
  EXPECT_NEAR(v.phi, r3, 1e-12);
  EXPECT_NEAR(v.psi, r3, 1e-12);
  EXPECT_NEAR(v.B, 1, 1e-15);
  EXPECT_NEAR(v.T, 2 / r3, 1e-12);
}

TEST(Constraints, RightVertex) {
  auto v = slope::eval_constraints(SlopePair{a_right, -a_right / 2});
  EXPECT_NEAR(v.f, r3, 1e-12);
  EXPECT_NEAR(v.g, r3, 1e-12);
  EXPECT_NEAR(slope::a_value().convert_to<double>(), a_right, 1e-15);
}

TEST(Constraints, SamplePoint) {
  auto v = slope::eval_constraints(SlopePair{0.2, -0.4});
  EXPECT_NEAR(v.f, 1.67703, 1e-5);
  EXPECT_NEAR(v.g, 1.70651, 1e-5);
  EXPECT_NEAR(v.phi, 1.70651, 1e-5);
  EXPECT_EQ(v.phi, std::max(v.f, v.g));
}

TEST(Constraints, ExactModeAtVertex) {
  Scalar t = -Scalar(0, Rational(1, 3));
  auto v = slope::eval_constraints_exact(Scalar(0), t);
  auto f = v.f.evaluate_exact(Scalar(0), t);
  ASSERT_TRUE(f.has_value());
  EXPECT_EQ(*f, Scalar::sqrt3());
}

TEST(Constraints, PsiPole) {
  // b - t + T = 0 at t = 0, b = -1.
  EXPECT_THROW(slope::eval_constraints(SlopePair{-1, 0}), PsiPole);
  EXPECT_NO_THROW(slope::eval_constraints(SlopePair{0.3, -0.2}));
}

TEST(Omega, Membership) {
  EXPECT_FALSE(slope::omega_contains(SlopePair{0, -1 / r3}, 0));
  EXPECT_TRUE(slope::omega_contains(SlopePair{0.2, -0.4}, 0));
  EXPECT_TRUE(slope::omega_contains(SlopePair{0, -1 / r3}, 0.01));
  // Exact mode agrees at the vertex.
  EXPECT_FALSE(slope::omega_contains(Scalar(0), -Scalar(0, Rational(1, 3))));
}

TEST(OmegaHat, Membership) {
  EXPECT_TRUE(slope::omegahat_contains(SlopePair{0, -1 / r3}, 1e-12));
  EXPECT_TRUE(slope::omegahat_contains(Scalar(0), -Scalar(0, Rational(1, 3))));
  EXPECT_TRUE(slope::omegahat_contains(SlopePair{0.2, -0.4}));
  EXPECT_FALSE(slope::omegahat_contains(SlopePair{0.6, -0.2}));
}

TEST(OmegaHat, ContainsOmega) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> ub(-0.1, 0.6), ut(-0.7, 0.0);
  int hits = 0;
  for (int i = 0; i < 10000; ++i) {
    SlopePair s{ub(rng), ut(rng)};
    if (slope::omega_contains(s, 0)) {
      ++hits;
      EXPECT_TRUE(slope::omegahat_contains(s)) << s.b << " " << s.t;
    }
  }
  EXPECT_GT(hits, 100);
}

TEST(Derivatives, MonotoneSigns) {
  std::mt19937_64 rng(5);
  const double h = 1e-6;
  for (int i = 0; i < 10000; ++i) {
    SlopePair s = random_in_trapezoid(rng);
    auto up = slope::eval_constraints(SlopePair{s.b, s.t + h});
    auto dn = slope::eval_constraints(SlopePair{s.b, s.t - h});
    EXPECT_LT(up.f - dn.f, 0);
    EXPECT_GT(up.g - dn.g, 0);
  }
}

TEST(Derivatives, DgDtMatchesFiniteDifference) {
  const double b = 0.2, t = -0.4, h = 1e-6;
  double fd = (slope::eval_constraints(SlopePair{b, t + h}).g - slope::eval_constraints(SlopePair{b, t - h}).g) / (2 * h);
  EXPECT_NEAR(slope::dg_dt(b, t), fd, 1e-8);
  EXPECT_GT(std::abs(slope::dg_dt_printed(b, t) - fd), 1e-3);
}

TEST(Constraints, SymmetricIdentityExact) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> n(-20, 20), d(1, 7);
  for (int i = 0; i < 50; ++i) {
    Scalar b(Rational(n(rng), d(rng))), t(Rational(n(rng), d(rng)));
    auto v = slope::eval_constraints_exact(b, t);
    // f - g - (2(b - t) + T - sqrt(4B^2 + T^2)) is identically zero.
    auto diff = v.f - v.g - (algebra::RadicalExpr(2) * (algebra::RadicalExpr(b) - algebra::RadicalExpr(t)) + v.T -
                             sqrt(algebra::RadicalExpr(4) * v.B * v.B + v.T * v.T));
    EXPECT_NEAR(diff.evaluate(0.0, 0.0), 0, 1e-12);
    hp::Real hv = diff.evaluate(hp::Real(0), hp::Real(0));
    EXPECT_LT(abs(hv), hp::Real("1e-30"));
  }
}

TEST(Boundary, VerticesAndTolerance) {
  auto poly = slope::sample_omega_boundary(64, 0);
  auto left = *std::min_element(poly.begin(), poly.end(), [](auto& p, auto& q) { return p.b < q.b; });
  auto right = *std::max_element(poly.begin(), poly.end(), [](auto& p, auto& q) { return p.b < q.b; });
  EXPECT_NEAR(left.b, 0, 1e-6);
  EXPECT_NEAR(left.t, -1 / r3, 1e-6);
  EXPECT_NEAR(right.b, a_right, 1e-6);
  EXPECT_NEAR(right.t, -a_right / 2, 1e-6);
  for (const auto& p : poly) {
    auto v = slope::eval_constraints_hp(p);
    EXPECT_LT(abs(v.phi - hp::sqrt3()), hp::Real("1e-9")) << p.b << " " << p.t;
  }
}

TEST(Boundary, EnlargementContainsOriginal) {
  auto small = slope::sample_omega_boundary(64, 0);
  auto big = slope::sample_omega_boundary(8, 0.1);
  for (const auto& p : small) EXPECT_TRUE(inside(big, p.b, p.t)) << p.b << " " << p.t;
}

TEST(PsiBound, SatisfiedOnTheExampleBand) {
  auto sim = example::build_default_sim();
  const auto& n = sim.report.normalization;
  auto v = slope::eval_constraints(SlopePair{n.b, n.t});
  EXPECT_GE(n.S1, v.psi - 1e-9);
  EXPECT_GE(n.S2, v.psi - 1e-9);
}
