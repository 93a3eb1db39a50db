// One PASS/FAIL line per acceptance criterion, with indented detail lines.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <future>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "moebius/band.hpp"
#include "moebius/certificates.hpp"
#include "moebius/example.hpp"
#include "moebius/slope_domain.hpp"
#include "oracle.hpp"

using namespace moebius;
using algebra::Rational;
using algebra::Scalar;
using Clock = std::chrono::steady_clock;

namespace {

struct Criterion {
  std::string name;
  bool passed = true;
  std::vector<std::string> details;

  void check(bool ok, const std::string& what) {
    passed = passed && ok;
    details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { details.push_back("info " + what); }
};

template <class T>
std::string str(const T& v, int digits = 6) {
  std::ostringstream s;
  s.precision(digits);
  s << v;
  return s.str();
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

double witness(const cert::Verdict& v, const std::string& step, const std::string& key) {
  const cert::Step* s = v.find_step(step);
  if (s == nullptr || s->find(key) == nullptr) return std::nan("");
  return std::stod(*s->find(key));
}

bool step_passed(const cert::Verdict& v, const std::string& step) {
  const cert::Step* s = v.find_step(step);
  return s != nullptr && s->passed;
}

Criterion certificate_suite() {
  Criterion c{"certificate suite", true, {}};
  auto start = Clock::now();
  std::vector<std::future<cert::Verdict>> jobs;
  for (const auto& n : cert::certificate_names()) {
    jobs.push_back(std::async(std::launch::async, [n] { return cert::run_certificate(n); }));
  }
  std::vector<cert::Verdict> v;
  for (auto& f : jobs) v.push_back(f.get());
  double elapsed = seconds_since(start);
  for (const auto& x : v) {
    c.check(x.passed, "verify " + x.name);
    for (const auto& d : x.deviations) c.note(x.name + ": " + d);
  }
  const auto &slope = v[0], &aspect = v[1], &xy = v[2], &tri = v[3], &pitch = v[4];

  double g = witness(slope, "g on t = (2/3)b - 1/2: minimizer", "g_minus_sqrt3");
  c.check(g > 1e-5 && g < 3e-5, "(i) minimizer g - sqrt3 = " + str(g) + " in (1e-5, 3e-5)");

  bool ident = true;
  for (const char* s : {"third t-derivative", "P'' on Z", "P' on Z", "(3/4)P on Z"}) {
    const cert::Step* st = aspect.find_step(s);
    ident = ident && st != nullptr && st->passed && st->method == cert::Method::exact_identity;
  }
  c.check(ident, "(ii) P''' = 108b and the P'', P', (3/4)P restrictions hold as exact identities");

  const cert::Step* nr = xy.find_step("x-bound nearest root");
  bool bracket = false;
  double lo = std::nan(""), hi = std::nan("");
  if (nr != nullptr) {
    Rational rlo(*nr->find("nearest_root_lo")), rhi(*nr->find("nearest_root_hi"));
    rlo.canonicalize();
    rhi.canonicalize();
    lo = rlo.get_d();
    hi = rhi.get_d();
    bracket = rlo >= Rational(62432, 100000) && rhi <= Rational(62433, 100000);
  }
  c.check(bracket, "(iii) nearest positive root of the degree-8 polynomial in [" + str(lo, 10) + ", " + str(hi, 10) +
                       "] within [0.62432, 0.62433]");
  double neg = witness(xy, "quartic root inventory", "negative_roots");
  double pos = witness(xy, "quartic root inventory", "positive_roots");
  c.check(neg == 2, "(iii) quartic has exactly 2 negative real roots (found " + str(neg) + " negative, " + str(pos) +
                        " positive)");
  c.check(step_passed(xy, "y-bound no roots"), "(iii) quartic has no root in (0, 1/2]");

  double val = witness(tri, "right vertex value", "value");
  c.check(val > 1.128 && val < 1.130, "(iv) (B + 1/18)/T at (a, -a/2) = " + str(val) + " in (1.128, 1.130)");

  double margin = witness(pitch, "pitch chain", "certified_margin_lower_bound");
  c.check(pitch.passed && margin > 6e-3, "(v) pi/15 - (sqrt3 + 1/24 - pi/2) > " + str(margin) + " > 6e-3");

  c.check(elapsed <= 60, "runtime " + str(elapsed, 3) + " s <= 60 s");
  return c;
}

Criterion example_reproduction() {
  Criterion c{"example reproduction", true, {}};
  auto start = Clock::now();
  hp::ensure_precision();
  auto s = example::solve_de(example::default_a(), example::default_b(), example::default_c());
  auto sim = example::build_default_sim();
  double elapsed = seconds_since(start);
  const hp::Real d0("0.21778861997940448854884398362715"), e0("0.430276286044826578252918671160933");
  hp::Real dd = abs(s.d - d0), de = abs(s.e - e0);
  c.check(dd < hp::Real("1e-31"), "d matches the 32-digit printed value to 30 significant digits, |diff| = " +
                                      str(dd.convert_to<double>(), 3));
  c.check(de < hp::Real("1e-31"), "e matches the printed value to 30 significant digits, |diff| = " +
                                      str(de.convert_to<double>(), 3));
  c.check(s.residual < hp::Real("1e-28"), "residual " + str(s.residual.convert_to<double>(), 3) + " < 1e-28");
  const auto& r = sim.report;
  double lm = r.lambda_minus_sqrt3.convert_to<double>();
  c.check(lm > -0.0018 && lm < -0.0016, "lambda - sqrt3 = " + str(lm, 8) + " in (-0.0018, -0.0016)");
  double ox = r.midpoint_offset[0].convert_to<double>(), oy = r.midpoint_offset[1].convert_to<double>();
  c.check(std::abs(ox - 0.0054) <= 1e-3 && std::abs(oy - 0.0010) <= 1e-3,
          "midpoint offset (" + str(ox, 4) + ", " + str(oy, 4) + ") within 1e-3 of (.0054, .0010)");
  c.check(elapsed <= 10, "runtime " + str(elapsed, 3) + " s <= 10 s");
  return c;
}

void geometry_of(Criterion& c, const std::string& label, const band::ImmersedBand& b, bool theorem) {
  double lambda = b.flat().lambda();
  auto ridge = band::ridge_curve(b);
  c.check(std::abs(ridge.length() - 2 * lambda) <= 1e-9,
          label + ": ridge length - 2 lambda = " + str(ridge.length() - 2 * lambda, 3));
  c.check(ridge.tangency_defect() <= 1e-6, label + ": tangency defect " + str(ridge.tangency_defect(), 3));
  auto patterns = band::find_t_patterns(b);
  c.check(!patterns.empty(), label + ": " + str(patterns.size()) + " T-pattern(s)");
  if (patterns.empty()) return;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    auto n = band::normalize(b, patterns[i]);
    // Measured slopes carry round-off, so membership is tested with 1e-9 slack.
    c.check(slope::omegahat_contains(slope::SlopePair{n.b, n.t}, 1e-9),
            label + ": pattern " + str(i + 1) + " (b, t) = (" + str(n.b, 6) + ", " + str(n.t, 6) + ") in the trapezoid");
  }
  auto n = band::normalize(b, patterns.front());
  if (theorem) {
    auto p = band::aspect_properties(n);
    c.check(p.statement1, label + ": S1, S2 >= sqrt3 - b(1 - 2b)/3 - 1e-9, margins " + str(p.S_margin[0], 4) + ", " +
                              str(p.S_margin[1], 4));
    c.check(n.x < 1.0 / 18, label + ": x = " + str(n.x, 6) + " < 1/18");
    c.check(std::abs(n.y) < 1.0 / 30, label + ": |y| = " + str(std::abs(n.y), 3) + " < 1/30");
    c.check(p.statement3, label + ": hull min angle " + str(p.hull.min_angle, 4) + " > pi/4");
  }
  for (int k = 1; k <= 2; ++k) {
    double bt = band::max_backtrack(band::pitch_profile(b, n, k));
    c.check(bt < M_PI / 30, label + ": trapezoid " + str(k) + " pitch backtrack " + str(bt, 3) + " < pi/30");
  }
}

Criterion geometry_properties() {
  Criterion c{"geometry properties", true, {}};
  geometry_of(c, "fig 1.1", band::fig11_band(), false);
  geometry_of(c, "example", example::build_default_sim().band, true);
  return c;
}

Criterion oracle_equivalence() {
  Criterion c{"oracle equivalence", true, {}};
  std::mt19937_64 rng(20240601);
  int agree = 0;
  const int n = 500;
  for (int i = 0; i < n; ++i) {
    auto k = oracle::random_case(rng);
    std::size_t s = algebra::sturm_count(k.p, Scalar(k.lo), Scalar(k.hi));
    std::size_t o = oracle::count(k.p, k.lo, k.hi);
    if (s == o) {
      ++agree;
    } else {
      c.note("disagree: " + k.p.str() + " on (" + k.lo.get_str() + ", " + k.hi.get_str() + "]: sturm " + str(s) +
             ", oracle " + str(o));
    }
  }
  c.check(agree == n, str(agree) + "/" + str(n) + " random polynomials agree");
  return c;
}

Criterion negative_control() {
  Criterion c{"negative control", true, {}};
  bool base = cert::verify_x_bound(Rational(1, 18)).passed;
  bool control = cert::verify_x_bound(Rational(1, 17)).passed;
  bool tighter = cert::verify_x_bound(Rational(1, 19)).passed;
  c.check(base, "x-bound with 1/18 passes");
  c.check(!control, std::string("x-bound with 1/17 fails (it ") + (control ? "passes" : "fails") + ")");
  c.note(std::string("x-bound with 1/19 ") + (tighter ? "passes" : "fails"));
  return c;
}

}  // namespace

int main() {
  std::vector<Criterion (*)()> all = {certificate_suite, example_reproduction, geometry_properties, oracle_equivalence,
                                      negative_control};
  bool ok = true;
  int i = 0;
  for (auto f : all) {
    Criterion c = f();
    ok = ok && c.passed;
    std::cout << (c.passed ? "PASS" : "FAIL") << " [PRIMARY] " << ++i << " " << c.name << "\n";
    for (const auto& d : c.details) std::cout << "    " << d << "\n";
  }
  return ok ? 0 : 1;
}
