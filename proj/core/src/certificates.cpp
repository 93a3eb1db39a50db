#include "moebius/certificates.hpp"

#include <cmath>
#include <sstream>

#include <mpfr.h>

#include "moebius/errors.hpp"
#include "moebius/slope_domain.hpp"

namespace moebius::cert {

using algebra::EvidenceLog;
using algebra::MPoly;
using algebra::Poly;
using algebra::RadicalExpr;
using algebra::Scalar;
using algebra::Var;
using hp::Real;

std::string to_string(Method m) {
  switch (m) {
    case Method::exact_identity: return "exact-identity";
    case Method::sturm: return "sturm";
    case Method::interval: return "interval";
    case Method::numeric_eval: return "numeric-eval";
  }
  return "?";
}

Method method_from_string(const std::string& s) {
  for (Method m : {Method::exact_identity, Method::sturm, Method::interval, Method::numeric_eval}) {
    if (to_string(m) == s) return m;
  }
  throw ParseError("unknown step method: " + s);
}

const std::string* Step::find(const std::string& key) const {
  for (const auto& [k, v] : witness) {
    if (k == key) return &v;
  }
  return nullptr;
}

void Verdict::add(Step s) {
  passed = passed && s.passed;
  steps.push_back(std::move(s));
}

const Step* Verdict::find_step(const std::string& description) const {
  for (const auto& s : steps) {
    if (s.description == description) return &s;
  }
  return nullptr;
}

MPoly printed_P() {
  return algebra::parse_mpoly(
      "4 b^6-8 b^5 t-16 b^5+20 b^4 t+12 sqrt3 b^4+12 b^4-24 sqrt3 b^3 t-8 b^3 t-24 sqrt3 b^3- 8 b^3"
      "+9 b^2 t^2+12 b^2 t+30 sqrt3 b^2 t-12 sqrt3 b^2+59 b^2+18 b t^3-42 b t-12 sqrt3 b+27 t^2"
      "+18 sqrt3 t+9");
}

Poly printed_P2_on_Z() { return algebra::parse_poly("54 - 36 sqrt3 b + 90b^2"); }

Poly printed_P1_on_Z() {
  return algebra::parse_poly("b(12 + 12 b+ 28 b^2 - 24 sqrt3 b^2) + b^4(20 - 8 b)");
}

Poly printed_three_quarters_P_on_Z() {
  return algebra::parse_poly(
      "b^2(21-12 sqrt3+18 b - 10 sqrt3 b + 12 b^2 - 8 sqrt3 b^2 - 2 b^2) + b^5(2 sqrt3 -b)");
}

Poly corrected_three_quarters_P_on_Z() {
  return algebra::parse_poly(
      "b^2(21-12 sqrt3+18 b - 10 sqrt3 b + 12 b^2 - 8 sqrt3 b^2 - 2 b^3) + b^5(2 sqrt3 -b)");
}

Poly printed_degree8() {
  return algebra::parse_poly(
      "379204871936 - 2821217402880 b - 3788174241792 b^2 + 59974706921472 b^3 - 81516306161664 b^4"
      " - 11284439629824 b^5 + 30126667530240 b^6 - 2821109907456 b^8");
}

Poly printed_quartic() { return algebra::parse_poly("-300 b^4-40 sqrt3 b^2+1600 b^2-600 b+80 sqrt3-79"); }

namespace {

const Rational kAUpper(47, 100);

std::string num(const Real& x, int digits = 20) { return hp::to_string(x, digits); }

std::string num(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

std::string join(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) {
    if (!out.empty()) out += "; ";
    out += l;
  }
  return out;
}

std::string interval_str(const Rational& lo, const Rational& hi) {
  return "(" + lo.get_str() + ", " + hi.get_str() + "]";
}

// Threshold for "vanishes" at working precision.
Real tiny() {
  hp::ensure_precision();
  int digits = static_cast<int>(hp::precision_bits() * 0.30103) - 6;
  return boost::multiprecision::pow(Real(10), -digits);
}

RadicalExpr line(const Scalar& slope, const Scalar& intercept) {
  return RadicalExpr(slope) * RadicalExpr::b() + RadicalExpr(intercept);
}

const Scalar kInvSqrt3(0, Rational(1, 3));

Step no_roots_step(std::string description, std::string claim, const Poly& p, const Rational& lo,
                   const Rational& hi) {
  Step s{std::move(description), std::move(claim), Method::sturm, false, {}};
  EvidenceLog log;
  std::size_t n = algebra::sturm_count(p, Scalar(lo), Scalar(hi), &log);
  s.passed = n == 0;
  s.witness = {{"polynomial", p.str()},
               {"interval", interval_str(lo, hi)},
               {"root_count", std::to_string(n)},
               {"evidence", join(log.lines)}};
  return s;
}

Step hp_positive_step(std::string description, std::string claim, const RadicalExpr& e, const Rational& at) {
  Real v = e.evaluate(hp::from_rational(at), Real(0));
  Step s{std::move(description), std::move(claim), Method::numeric_eval, v > 0, {}};
  s.witness = {{"point", at.get_str()}, {"value", num(v)}};
  return s;
}

Step exact_positive_step(std::string description, const Poly& p, const Rational& at) {
  Scalar v = p(Scalar(at));
  Step s{std::move(description), "anchor value is positive", Method::exact_identity, v.sign() > 0, {}};
  s.witness = {{"point", at.get_str()}, {"value", v.str()}, {"approx", num(v.to_double())}};
  return s;
}

// All terms have even exponents and positive coefficients, constant positive.
bool positive_definite_even(const MPoly& p) {
  if (p.constant_term().sign() <= 0) return false;
  for (const auto& [e, c] : p.terms()) {
    if (c.sign() <= 0) return false;
    for (int k : e) {
      if (k % 2 != 0) return false;
    }
  }
  return true;
}

}  // namespace

Verdict verify_slope_theorem() {
  hp::ensure_precision();
  Verdict v;
  v.name = "slope";
  const RadicalExpr b = RadicalExpr::b();
  const RadicalExpr t = RadicalExpr::t();
  const RadicalExpr r3(Scalar::sqrt3());
  const RadicalExpr f_minus = slope::f_expr(b, t) - r3;
  const RadicalExpr g_minus = slope::g_expr(b, t) - r3;
  const Poly m = slope::a_minimal_poly();

  {
    auto fe = f_minus.evaluate_exact(Scalar(0), -kInvSqrt3);
    auto ge = g_minus.evaluate_exact(Scalar(0), -kInvSqrt3);
    Step s{"vertex identity", "f - sqrt3 = g - sqrt3 = 0 at (0, -1/sqrt3)", Method::exact_identity,
           fe && ge && fe->is_zero() && ge->is_zero(), {}};
    s.witness = {{"f_minus_sqrt3", fe ? fe->str() : "not in Q(sqrt3)"},
                 {"g_minus_sqrt3", ge ? ge->str() : "not in Q(sqrt3)"}};
    v.add(std::move(s));
  }
  {
    RadicalExpr half = line(Scalar::ratio(-1, 2), Scalar(0));
    auto ef = algebra::eliminate_radicals(f_minus.substitute(Var::t, half));
    auto eg = algebra::eliminate_radicals(g_minus.substitute(Var::t, half));
    Poly pf = ef.univariate();
    Poly pg = eg.univariate();
    Step s{"right vertex elimination",
           "on t = -b/2 both f - sqrt3 and g - sqrt3 eliminate to multiples of b^2 - (3 sqrt3/2) b + 1, whose smaller root is a",
           Method::exact_identity, algebra::associated(pf, m) && algebra::associated(pg, m), {}};
    s.witness = {{"f_eliminated", pf.str()},
                 {"g_eliminated", pg.str()},
                 {"minimal_polynomial", m.str()},
                 {"rounds", std::to_string(ef.rounds) + "," + std::to_string(eg.rounds)}};
    v.add(std::move(s));
  }
  {
    Scalar m0 = m(Scalar(0));
    Scalar mhi = m(Scalar(kAUpper));
    EvidenceLog log;
    std::size_t n = algebra::sturm_count(m, Scalar(0), Scalar(kAUpper), &log);
    Step s{"a bracket", "m(0) > 0 > m(47/100), one root in (0, 47/100], so 0 < a < 47/100", Method::sturm,
           m0.sign() > 0 && mhi.sign() < 0 && n == 1, {}};
    s.witness = {{"m(0)", m0.str()}, {"m(47/100)", mhi.str()}, {"root_count", std::to_string(n)},
                 {"evidence", join(log.lines)}};
    v.add(std::move(s));
  }
  {
    Real a = slope::a_value();
    Real fa = f_minus.evaluate(a, -a / 2);
    Real ga = g_minus.evaluate(a, -a / 2);
    Step s{"right vertex residual", "f and g equal sqrt3 at (a, -a/2) numerically (rules out a spurious root)",
           Method::numeric_eval, abs(fa) < tiny() && abs(ga) < tiny(), {}};
    s.witness = {{"a", num(a, 30)}, {"f_minus_sqrt3", num(fa, 6)}, {"g_minus_sqrt3", num(ga, 6)}};
    v.add(std::move(s));
  }
  {
    Step s{"derivative signs", "df/dt = -1 + t/T < 0 and dg/dt = 1 + t/sqrt(5+4b^2+t^2) > 0 everywhere",
           Method::exact_identity, false, {}};
    MPoly tt = MPoly::t() * MPoly::t();
    MPoly d1 = (MPoly(Scalar(1)) + tt) - tt;
    MPoly d2 = (MPoly(Scalar(5)) + MPoly(Scalar(4)) * MPoly::b() * MPoly::b() + tt) - tt;
    s.passed = positive_definite_even(d1) && positive_definite_even(d2);
    s.witness = {{"T^2 - t^2", d1.str()},
                 {"(5+4b^2+t^2) - t^2", d2.str()},
                 {"dg_dt_at(0.2,-0.4)", num(slope::dg_dt(0.2, -0.4))},
                 {"printed_form_at(0.2,-0.4)", num(slope::dg_dt_printed(0.2, -0.4))}};
    v.add(std::move(s));
    v.deviations.push_back(
        "printed dg/dt = 1 + t/(5+5b^2+t^2) differs from the derivative of g, 1 + t/sqrt(5+4b^2+t^2); "
        "the derivative of g as defined is used");
  }
  {
    Real c = hp::sqrt3();
    Step s{"g below f at b = -1, 1", "the level curve g = sqrt3 lies below f = sqrt3 at b = -1 and b = 1",
           Method::numeric_eval, true, {}};
    for (int bi : {-1, 1}) {
      Real tf = slope::t_on_f_level(Real(bi), c);
      Real tg = slope::t_on_g_level(Real(bi), c);
      s.passed = s.passed && tg < tf;
      s.witness.emplace_back("t_f(" + std::to_string(bi) + ")", num(tf));
      s.witness.emplace_back("t_g(" + std::to_string(bi) + ")", num(tg));
    }
    v.add(std::move(s));
  }
  // Upper line t = (2/3)b - 1/2 with g.
  {
    RadicalExpr ln = line(Scalar::ratio(2, 3), Scalar::ratio(-1, 2));
    RadicalExpr gl = g_minus.substitute(Var::t, ln);
    auto el = algebra::eliminate_radicals(gl);
    Poly p = el.univariate();
    Step s = no_roots_step("g on t = (2/3)b - 1/2: no roots",
                           "eliminated polynomial has no root in [0, 47/100] (contains [0, a])", p, Rational(0),
                           kAUpper);
    s.passed = s.passed && !p(Scalar(0)).is_zero();
    s.witness.emplace_back("value_at_0", p(Scalar(0)).str());
    v.add(std::move(s));
    v.add(hp_positive_step("g on t = (2/3)b - 1/2: anchor", "g - sqrt3 > 0 at the interval midpoint", gl,
                           kAUpper / 2));
    Real bstar = (39 + boost::multiprecision::sqrt(Real(8151))) / 520;
    Real val = gl.evaluate(bstar, Real(0));
    // d/db g(b, (2/3)b - 1/2) = -1/3 + (4b + (2/3)t)/sqrt(5 + 4b^2 + t^2)
    Real tl = 2 * bstar / 3 - Real(1) / 2;
    Real deriv = Real(-1) / 3 + (4 * bstar + 2 * tl / 3) / boost::multiprecision::sqrt(5 + 4 * bstar * bstar + tl * tl);
    Step w{"g on t = (2/3)b - 1/2: minimizer",
           "minimum at b* = (39 + sqrt8151)/520 with g - sqrt3 in (1e-5, 3e-5)", Method::numeric_eval,
           val > Real("1e-5") && val < Real("3e-5") && abs(deriv) < tiny(), {}};
    w.witness = {{"b_star", num(bstar)}, {"g_minus_sqrt3", num(val)}, {"derivative", num(deriv, 6)}};
    v.add(std::move(w));
  }
  // Lower line t = (2/3)b - 1/sqrt3 with f.
  {
    RadicalExpr ln = line(Scalar::ratio(2, 3), -kInvSqrt3);
    RadicalExpr fl = f_minus.substitute(Var::t, ln);
    Poly p = algebra::eliminate_radicals(fl).univariate();
    v.add(no_roots_step("f on t = (2/3)b - 1/sqrt3: no roots", "eliminated polynomial has no root in (0, 47/100]",
                        p, Rational(0), kAUpper));
    v.add(hp_positive_step("f on t = (2/3)b - 1/sqrt3: anchor", "f - sqrt3 > 0 at the interval midpoint", fl,
                           kAUpper / 2));
    auto at0 = fl.evaluate_exact(Scalar(0), Scalar(0));
    Step s{"f on t = (2/3)b - 1/sqrt3: infimum", "value at b = 0 is exactly sqrt3", Method::exact_identity,
           at0 && at0->is_zero(), {}};
    s.witness = {{"f_minus_sqrt3_at_0", at0 ? at0->str() : "not in Q(sqrt3)"}};
    v.add(std::move(s));
  }
  // Second lower-right line t = (4/3)b - 1/sqrt3 with g.
  {
    RadicalExpr ln = line(Scalar::ratio(4, 3), -kInvSqrt3);
    RadicalExpr gl = g_minus.substitute(Var::t, ln);
    Poly p = algebra::eliminate_radicals(gl).univariate();
    v.add(no_roots_step("g on t = (4/3)b - 1/sqrt3: no roots", "eliminated polynomial has no root in (0, 47/100]",
                        p, Rational(0), kAUpper));
    v.add(hp_positive_step("g on t = (4/3)b - 1/sqrt3: anchor", "g - sqrt3 > 0 at the interval midpoint", gl,
                           kAUpper / 2));
    v.deviations.push_back("the third constraint line printed as t = (4/3)t - 1/sqrt3 is read as t = (4/3)b - 1/sqrt3");
  }
  v.deviations.push_back(
      "sturm counts divide out a root at an open endpoint exactly instead of shrinking the endpoint by 1/2^k");
  return v;
}

Verdict verify_aspect_statement1() {
  hp::ensure_precision();
  Verdict v;
  v.name = "aspect";
  const MPoly P = printed_P();
  {
    auto el = algebra::eliminate_radicals(slope::psihat_expr(RadicalExpr::b(), RadicalExpr::t()));
    Scalar k;
    bool ok = algebra::scalar_multiple(el.polynomial, P, &k);
    Step s{"psi-hat elimination", "eliminating psi-hat reproduces P up to a nonzero constant",
           Method::exact_identity, ok, {}};
    s.witness = {{"factor", ok ? k.str() : "none"}, {"rounds", std::to_string(el.rounds)},
                 {"terms", std::to_string(el.polynomial.terms().size())}, {"evidence", join(el.log)}};
    v.add(std::move(s));
  }
  const MPoly P1 = P.derivative(1);
  const MPoly P2 = P1.derivative(1);
  const MPoly P3 = P2.derivative(1);
  {
    MPoly expect = MPoly(Scalar(108)) * MPoly::b();
    Step s{"third t-derivative", "d^3P/dt^3 = 108 b", Method::exact_identity, P3 == expect, {}};
    s.witness = {{"P'''", P3.str()}};
    v.add(std::move(s));
  }
  const MPoly z = MPoly(Scalar::ratio(2, 3)) * MPoly::b() + MPoly(Scalar(0, Rational(-1, 3)));
  const Poly P2z = P2.substitute(1, z).to_poly(0);
  const Poly P1z = P1.substitute(1, z).to_poly(0);
  const Poly Pz = P.substitute(1, z).to_poly(0);
  {
    Step s{"P'' on Z", "P'' restricted to t = (2/3)b - 1/sqrt3 equals 54 - 36 sqrt3 b + 90 b^2",
           Method::exact_identity, P2z == printed_P2_on_Z(), {}};
    s.witness = {{"computed", P2z.str()}};
    v.add(std::move(s));
  }
  {
    Step s{"P' on Z", "P' restricted to Z equals b(12 + 12b + 28b^2 - 24 sqrt3 b^2) + b^4(20 - 8b)",
           Method::exact_identity, P1z == printed_P1_on_Z(), {}};
    s.witness = {{"computed", P1z.str()}};
    v.add(std::move(s));
  }
  {
    Poly three_quarters = Pz * Poly(Scalar::ratio(3, 4));
    Poly literal_residual = three_quarters - printed_three_quarters_P_on_Z();
    bool corrected = three_quarters == corrected_three_quarters_P_on_Z();
    Step s{"(3/4)P on Z",
           "(3/4)P restricted to Z equals the printed expression with its -2b^2 term read as -2b^3",
           Method::exact_identity, corrected, {}};
    s.witness = {{"computed", three_quarters.str()},
                 {"literal_residual", literal_residual.str()},
                 {"literal_matches", literal_residual.is_zero() ? "true" : "false"}};
    v.add(std::move(s));
    if (!literal_residual.is_zero()) {
      v.deviations.push_back("printed (3/4)P on Z differs from the computed restriction by " +
                             literal_residual.str() + "; the term -2b^2 inside the first bracket is read as -2b^3");
    }
  }
  const Rational half(1, 2);
  const Rational quarter(1, 4);
  for (const auto& [label, poly] : {std::pair<std::string, Poly>{"P''", P2z}, {"P'", P1z}, {"P", Pz}}) {
    v.add(no_roots_step(label + " on Z: no roots", label + " has no root in (0, 1/2)", poly, Rational(0), half));
    v.add(exact_positive_step(label + " on Z: anchor", poly, quarter));
  }
  {
    // 1/24 - b(1 - 2b)/3 = (2/3)(b - 1/4)^2
    Poly lhs = Poly(Scalar::ratio(1, 24)) - Poly({Scalar(0), Scalar::ratio(1, 3), Scalar::ratio(-2, 3)});
    Poly sq = Poly({Scalar::ratio(-1, 4), Scalar(1)});
    Poly rhs = Poly(Scalar::ratio(2, 3)) * sq * sq;
    Step s{"generic constant", "b(1-2b)/3 <= 1/24 with equality at b = 1/4, so S_j >= sqrt3 - b(1-2b)/3 >= sqrt3 - 1/24",
           Method::exact_identity, lhs == rhs, {}};
    s.witness = {{"pointwise_bound", "sqrt3 - b(1-2b)/3"}, {"worst_case", "sqrt3 - 1/24"},
                 {"identity", "1/24 - b(1-2b)/3 = (2/3)(b - 1/4)^2"}};
    v.add(std::move(s));
  }
  v.deviations.push_back(
      "sturm counts divide out a root at an open endpoint exactly instead of shrinking the endpoint by 1/2^k");
  return v;
}

namespace {

void add_x_steps(Verdict& v, const Rational& x) {
  const RadicalExpr b = RadicalExpr::b();
  RadicalExpr ln = line(Scalar::ratio(2, 3), Scalar::ratio(-1, 2));
  RadicalExpr phi = slope::x_bound_expr(b, RadicalExpr::t(), Scalar(x)).substitute(Var::t, ln);
  {
    Real at0 = phi.evaluate(Real(0), Real(0));
    Step s{"x-bound anchor at 0", "phi(0) > 0", Method::numeric_eval, at0 > 0, {}};
    s.witness = {{"x", x.get_str()}, {"phi(0)", num(at0)}};
    v.add(std::move(s));
  }
  auto el = algebra::eliminate_radicals(phi);
  Poly p = el.univariate();
  if (x == Rational(1, 18)) {
    Step s{"x-bound polynomial", "eliminating phi reproduces the printed degree-8 polynomial up to a constant",
           Method::exact_identity, algebra::associated(p, printed_degree8()), {}};
    s.witness = {{"rounds", std::to_string(el.rounds)}, {"degree", std::to_string(p.degree())},
                 {"evidence", join(el.log)}};
    v.add(std::move(s));
  }
  v.add(no_roots_step("x-bound no roots", "eliminated polynomial has no root in (0, 1/2]", p, Rational(0),
                      Rational(1, 2)));
  v.add(hp_positive_step("x-bound midpoint anchor", "phi > 0 at b = 1/4", phi, Rational(1, 4)));
  {
    auto roots = algebra::isolate_roots(p, Rational(0), Rational(1), Rational(1, 1000000));
    Step s{"x-bound nearest root", "nearest positive root of the eliminated polynomial, isolated by bisection",
           Method::sturm, true, {}};
    if (roots.empty()) {
      s.witness = {{"nearest_root", "none in (0, 1]"}};
    } else {
      s.witness = {{"nearest_root_lo", roots.front().lo.get_str()},
                   {"nearest_root_hi", roots.front().hi.get_str()},
                   {"nearest_root_approx", num(roots.front().lo.get_d())}};
    }
    v.add(std::move(s));
  }
}

}  // namespace

Verdict verify_x_bound(const Rational& x) {
  hp::ensure_precision();
  Verdict v;
  v.name = "x-bound";
  add_x_steps(v, x);
  return v;
}

Verdict verify_xy_bounds() {
  hp::ensure_precision();
  Verdict v;
  v.name = "xy";
  add_x_steps(v, Rational(1, 18));
  const RadicalExpr b = RadicalExpr::b();
  RadicalExpr ln = line(Scalar::ratio(2, 3), Scalar::ratio(-1, 2));
  RadicalExpr h = slope::y_bound_expr(b, RadicalExpr::t(), Scalar::ratio(1, 30)).substitute(Var::t, ln);
  {
    Real at0 = h.evaluate(Real(0), Real(0));
    Step s{"y-bound anchor at 0", "h(0) > 0", Method::numeric_eval, at0 > 0, {}};
    s.witness = {{"h(0)", num(at0)}};
    v.add(std::move(s));
  }
  auto el = algebra::eliminate_radicals(h);
  Poly q = el.univariate();
  {
    Step s{"y-bound polynomial", "eliminating h reproduces the printed quartic up to a constant",
           Method::exact_identity, algebra::associated(q, printed_quartic()), {}};
    s.witness = {{"rounds", std::to_string(el.rounds)}, {"computed", q.str()}};
    v.add(std::move(s));
  }
  v.add(no_roots_step("y-bound no roots", "quartic has no root in (0, 1/2]", printed_quartic(), Rational(0),
                      Rational(1, 2)));
  v.add(hp_positive_step("y-bound midpoint anchor", "h > 0 at b = 1/4", h, Rational(1, 4)));
  {
    Poly pq = printed_quartic();
    Rational m = algebra::root_bound(pq);
    std::size_t total = algebra::real_root_count(pq);
    std::size_t negative = algebra::sturm_count(pq, Scalar(Rational(-m)), Scalar(0));
    bool zero_root = pq(Scalar(0)).is_zero();
    auto neg = algebra::isolate_roots(pq, Rational(-m), Rational(0), Rational(1, 1000));
    Step s{"quartic root inventory", "two negative real roots and two non-real roots", Method::sturm,
           total == 2 && negative == 2 && !zero_root, {}};
    std::size_t positive = algebra::sturm_count(pq, Scalar(0), Scalar(m));
    s.witness = {{"real_roots", std::to_string(total)}, {"negative_roots", std::to_string(negative)},
                 {"positive_roots", std::to_string(positive)}, {"root_bound", m.get_str()}};
    for (const auto& r : algebra::isolate_roots(pq, Rational(0), m, Rational(1, 1000))) {
      s.witness.emplace_back("positive_root", interval_str(r.lo, r.hi));
    }
    if (negative != 2) {
      v.deviations.push_back("quartic root inventory: the stated two negative roots are not found; "
                             "the quartic has " + std::to_string(negative) + " negative and " +
                             std::to_string(positive) + " positive real root(s), none in (0, 1/2]");
    }
    for (std::size_t i = 0; i < neg.size(); ++i) {
      s.witness.emplace_back("negative_root_" + std::to_string(i), interval_str(neg[i].lo, neg[i].hi));
    }
    v.add(std::move(s));
  }
  return v;
}

Verdict verify_triangle_statement3() {
  hp::ensure_precision();
  using algebra::Interval;
  Verdict v;
  v.name = "triangle";
  Real a = slope::a_value();
  auto F = [](const Real& b, const Real& t) {
    return (boost::multiprecision::sqrt(1 + b * b) + Real(1) / 18) / boost::multiprecision::sqrt(1 + t * t);
  };
  {
    Real val = F(a, -a / 2);
    Step s{"right vertex value", "(B + 1/18)/T at (a, -a/2) is below 1.13", Method::numeric_eval,
           val < Real("1.13"), {}};
    s.witness = {{"value", num(val)}};
    v.add(std::move(s));
  }
  // Bounding box of Omega: [0, a] x [-1/sqrt3, -a/2], widened outward.
  const double b_hi = std::nextafter(a.convert_to<double>(), 1.0);
  const double t_lo = std::nextafter(-1 / std::sqrt(3.0), -1.0);
  const double t_hi = std::nextafter((-a / 2).convert_to<double>(), 0.0);
  const int n = 64;
  {
    // dg/db = -1 + 4b / sqrt(5 + 4b^2 + t^2) < 0 along t = -a/2 on [0, a].
    bool ok = true;
    double worst = -1e300;
    Interval t(t_hi - 1e-15, t_hi);
    for (int i = 0; i < n; ++i) {
      Interval b(b_hi * i / n, b_hi * (i + 1) / n);
      Interval d = Interval(-1) + Interval(4) * b / sqrt(Interval(5) + Interval(4) * square(b) + square(t));
      ok = ok && d.negative();
      worst = std::max(worst, d.hi());
    }
    Step s{"omega below t = -a/2",
           "g decreases in b along t = -a/2 on [0, a] and g(a, -a/2) = sqrt3, so g >= sqrt3 on and above that line",
           Method::interval, ok, {}};
    s.witness = {{"boxes", std::to_string(n)}, {"max_upper_bound_dg_db", num(worst)}};
    v.add(std::move(s));
  }
  {
    bool ok = true;
    double min_b = 1e300, min_t = 1e300;
    for (int i = 0; i < n; ++i) {
      Interval b(b_hi * i / n, b_hi * (i + 1) / n);
      for (int j = 0; j < n; ++j) {
        Interval t(t_lo + (t_hi - t_lo) * j / n, t_lo + (t_hi - t_lo) * (j + 1) / n);
        if (j == n - 1) t = Interval(t.lo(), t_hi);
        Interval B = sqrt(Interval(1) + square(b));
        Interval T = sqrt(Interval(1) + square(t));
        // dF/db = b * 1/(B T): b >= 0 and 1/(B T) > 0.
        Interval fb = Interval(1) / (B * T);
        // dF/dt = (-t) * (B + 1/18) / T^3 with -t > 0.
        Interval ft = -t * (B + Interval(1.0 / 18.0)) / (T * T * T);
        ok = ok && b.lo() >= 0 && fb.positive() && ft.positive();
        min_b = std::min(min_b, fb.lo());
        min_t = std::min(min_t, ft.lo());
      }
    }
    Step s{"monotonicity on box cover",
           "(B + 1/18)/T increases in b and t on [0, a] x [-1/sqrt3, -a/2], so its max over Omega is at (a, -a/2)",
           Method::interval, ok, {}};
    s.witness = {{"boxes", std::to_string(n) + "x" + std::to_string(n)},
                 {"min_lower_bound_dF_db_over_b", num(min_b)},
                 {"min_lower_bound_dF_dt", num(min_t)}};
    v.add(std::move(s));
  }
  {
    Real corner_t = 2 * a / 3 - Real(1) / 2;
    Real val = F(a, corner_t);
    Step s{"trapezoid corner value", "value at the top-right corner of the trapezoid (reported only)",
           Method::numeric_eval, true, {}};
    s.witness = {{"corner", "(" + num(a, 12) + ", " + num(corner_t, 12) + ")"}, {"value", num(val)}};
    v.add(std::move(s));
    v.deviations.push_back("(B + 1/18)/T reaches " + num(val, 6) +
                           " > 1.13 on the trapezoid; the bound is certified over the region itself, "
                           "inside [0, a] x [-1/sqrt3, -a/2]");
  }
  {
    // T <= sqrt(4/3) < 5/4, |y| < 1/8, altitude >= 1: foot within 3/4 of both ends.
    bool ok = Rational(4, 3) < Rational(25, 16) && Rational(5, 8) + Rational(1, 8) == Rational(3, 4) &&
              Rational(4, 3) > 1;
    Step s{"top and bottom angles", "both exceed atan(4/3) > pi/4 since 4/3 > 1 = tan(pi/4)",
           Method::exact_identity, ok, {}};
    s.witness = {{"atan(4/3)", num(std::atan(4.0 / 3.0))}, {"pi/4", num(std::atan(1.0))}};
    v.add(std::move(s));
  }
  {
    // atan u + atan v > pi/4 iff u + v > 1 - uv when uv < 1.
    Rational u = Rational(3, 8) / Rational(113, 100);
    Rational w = Rational(5, 8) / Rational(113, 100);
    bool ok = u > 0 && w > 0 && u * w < 1 && u + w > 1 - u * w;
    double sum = std::atan(u.get_d()) + std::atan(w.get_d());
    Step s{"left angle", "atan((3/8)/1.13) + atan((5/8)/1.13) > pi/4", Method::exact_identity, ok, {}};
    s.witness = {{"sum", num(sum)}, {"four_times_sum", num(4 * sum)}, {"pi/4", num(std::atan(1.0))}};
    v.add(std::move(s));
  }
  return v;
}

namespace {

// Rational enclosures of pi and sqrt3 from directed MPFR rounding.
struct Enclosure {
  Rational lo, hi;
};

Enclosure mpfr_enclosure(bool pi) {
  mpfr_t x;
  mpfr_init2(x, 256);
  mpq_t q;
  mpq_init(q);
  Enclosure e;
  for (int dir = 0; dir < 2; ++dir) {
    mpfr_rnd_t rnd = dir == 0 ? MPFR_RNDD : MPFR_RNDU;
    if (pi) mpfr_const_pi(x, rnd); else mpfr_sqrt_ui(x, 3, rnd);
    mpfr_get_q(q, x);
    (dir == 0 ? e.lo : e.hi) = Rational(q);
  }
  mpq_clear(q);
  mpfr_clear(x);
  return e;
}

}  // namespace

Verdict verify_pitch_constant(const Rational& excess) {
  hp::ensure_precision();
  Verdict v;
  v.name = "pitch";
  Enclosure pi = mpfr_enclosure(true);
  Enclosure r3 = mpfr_enclosure(false);
  bool enclosures_ok = r3.lo * r3.lo < 3 && r3.hi * r3.hi > 3 && pi.lo < pi.hi;
  auto chain = [&](const Rational& ex) {
    // upper bound of (sqrt3 + 1/24 + ex - pi/2) - pi/15
    return Rational(r3.hi + Rational(1, 24) + ex - pi.lo * Rational(17, 30));
  };
  {
    Rational upper = chain(excess);
    Rational margin = -upper;
    Step s{"pitch chain", "sqrt3 + 1/24 - pi/2 < pi/15 with margin > 6e-3", Method::interval,
           enclosures_ok && margin > Rational(6, 1000), {}};
    Real lhs = hp::sqrt3() + Real(1) / 24 + hp::from_rational(excess) - hp::pi() / 2;
    s.witness = {{"lhs", num(lhs)},
                 {"pi/15", num(hp::pi() / 15)},
                 {"certified_margin_lower_bound", num(margin.get_d())},
                 {"aspect_excess", excess.get_str()}};
    v.add(std::move(s));
  }
  {
    Step s{"theta bound", "l1 >= pi/2 + 2 theta and l1 < sqrt3 + 1/24 give 2 theta < pi/15, so theta < pi/30",
           Method::exact_identity, true, {}};
    s.witness = {{"theta_bound", "pi/30"}, {"theta_bound_approx", num(hp::pi() / 30)}};
    v.add(std::move(s));
  }
  {
    // l1 = 2 lambda - l2 < 2 sqrt3 - (sqrt3 - 1/24) = sqrt3 + 1/24
    Scalar lhs = Scalar(0, 2) - (Scalar::sqrt3() - Scalar::ratio(1, 24));
    Scalar rhs = Scalar::sqrt3() + Scalar::ratio(1, 24);
    Step s{"upper bound on l1", "2 sqrt3 - (sqrt3 - 1/24) = sqrt3 + 1/24", Method::exact_identity, lhs == rhs, {}};
    s.witness = {{"reading", "l1 = 2 lambda - l2 with lambda < sqrt3 and l2 = S_2 >= sqrt3 - 1/24"}};
    v.add(std::move(s));
    v.deviations.push_back(
        "the upper bound l1 < sqrt3 + 1/24 is cited from a lower-bound statement; it is checked under the "
        "reading l1 = 2 lambda - l2, which is not resolved here");
  }
  if (excess == 0) {
    Rational eps(1);
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, 100);
    eps /= p10;
    Rational margin = -chain(eps);
    Step s{"slack variant", "the chain still holds with aspect ratio bound sqrt3 + 1e-100", Method::interval,
           enclosures_ok && margin > Rational(6, 1000), {}};
    s.witness = {{"certified_margin_lower_bound", num(margin.get_d())}};
    v.add(std::move(s));
  }
  return v;
}

std::vector<std::string> certificate_names() { return {"slope", "aspect", "xy", "triangle", "pitch"}; }

Verdict run_certificate(const std::string& name) {
  if (name == "slope") return verify_slope_theorem();
  if (name == "aspect") return verify_aspect_statement1();
  if (name == "xy") return verify_xy_bounds();
  if (name == "triangle") return verify_triangle_statement3();
  if (name == "pitch") return verify_pitch_constant();
  throw UnknownCertificate(name);
}

}  // namespace moebius::cert
