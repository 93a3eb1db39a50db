#include "moebius/example.hpp"

#include <cmath>

#include <json.hpp>

#include "moebius/slope_domain.hpp"

namespace moebius::example {

namespace {

Real max_abs(const std::array<Real, 4>& r) {
  Real m = 0;
  for (const auto& x : r) m = std::max(m, Real(abs(x)));
  return m;
}

Point half_turn_point(const FoldLayout& l, const Point& p) {
  return {Real(1) - p[0], l.lambda + l.params.a - p[1]};
}

FoldParams with_de(const Rational& a, const Rational& b, const Rational& c, const Real& d, const Real& e) {
  return {hp::from_rational(a), hp::from_rational(b), hp::from_rational(c), d, e};
}

struct Newton2 {
  Rational a, b, c;

  std::array<Real, 4> eval(const Real& d, const Real& e) const {
    return residual_map(layout(with_de(a, b, c, d, e)));
  }
};

}  // namespace

Rational default_a() { return Rational(5, 27); }
Rational default_b() { return Rational(18, 53); }
Rational default_c() { return Rational(33, 128); }

Segment FoldLayout::half_turn(const Segment& s) const {
  // The image of a left-to-right segment is again written left to right.
  return {half_turn_point(*this, s.q), half_turn_point(*this, s.p)};
}

std::vector<Segment> FoldLayout::all_bends() const {
  std::vector<Segment> out(lines.begin(), lines.end());
  for (int k = 3; k >= 0; --k) out.push_back(half_turn(lines[k]));
  return out;
}

band::FlatBand FoldLayout::flat() const {
  using band::Side;
  const double a = params.a.convert_to<double>();
  const double lam = lambda.convert_to<double>();
  auto bends = all_bends();
  std::vector<band::Apex> apexes;
  for (std::size_t i = 0; i + 1 < bends.size(); ++i) {
    // The apex is the endpoint shared by consecutive bends.
    bool left_shared = abs(bends[i].p[1] - bends[i + 1].p[1]) < Real("1e-30");
    apexes.push_back({left_shared ? Side::left : Side::right,
                      (left_shared ? bends[i].p[1] : bends[i].q[1]).convert_to<double>()});
  }
  return band::FlatBand(lam, std::move(apexes), 0.0, a, std::pair{lam, lam + a});
}

FoldLayout layout(const FoldParams& p) {
  hp::ensure_precision();
  for (const Real* v : {&p.a, &p.b, &p.c, &p.d, &p.e}) {
    if (!(*v > 0)) throw InvalidLayout("fold parameters must be positive");
  }
  FoldLayout l;
  l.params = p;
  l.lambda = (p.a + p.b + p.d + p.e) + (p.b + p.d);
  const Real zero(0), one(1);
  l.lines[0] = {{zero, zero}, {one, p.a}};
  l.lines[1] = {{zero, zero}, {one, p.a + p.b}};
  l.lines[2] = {{zero, p.c}, {one, p.a + p.b}};
  l.lines[3] = {{zero, p.c}, {one, p.a + p.b + p.d}};
  l.lines[4] = {{zero, p.a + p.b + p.d + p.e}, {one, p.a + p.b + p.d}};
  // Boundary heights must increase on each side so that no two fold lines
  // cross inside the strip.
  if (!(p.c < p.a + p.b + p.d + p.e)) throw InvalidLayout("line 3 starts above line 5");
  return l;
}

Point reflect(const Segment& s, const Point& x) {
  Real dx = s.q[0] - s.p[0], dy = s.q[1] - s.p[1];
  Real n = dx * dx + dy * dy;
  Real t = ((x[0] - s.p[0]) * dx + (x[1] - s.p[1]) * dy) / n;
  Real fx = s.p[0] + t * dx, fy = s.p[1] + t * dy;
  return {2 * fx - x[0], 2 * fy - x[1]};
}

Segment m1_segment(const FoldLayout& l) {
  Segment m = l.lines[4];
  for (int k : {3, 2, 1}) m = {reflect(l.lines[k], m.p), reflect(l.lines[k], m.q)};
  return m;
}

std::array<Real, 4> residual_map(const FoldLayout& l) {
  Segment m = m1_segment(l);
  Point r11 = reflect(l.lines[0], m.p);
  Point r12 = reflect(l.lines[0], m.q);
  return {r11[0] - m.q[0], r11[1] - m.q[1], r12[0] - m.p[0], r12[1] - m.p[1]};
}

SolveResult solve_de(const Rational& a, const Rational& b, const Rational& c) {
  hp::ensure_precision();
  Newton2 f{a, b, c};
  Real d("0.2"), e("0.4");
  auto r = f.eval(d, e);
  const int digits = static_cast<int>(hp::precision_bits() * 0.30103);
  const Real h = boost::multiprecision::pow(Real(10), -(digits / 2));
  const Real target = boost::multiprecision::pow(Real(10), -(digits - 6));
  SolveResult out;
  Real j00, j01, j10, j11;
  for (int it = 1; it <= 200; ++it) {
    out.iterations = it;
    auto rd = f.eval(d + h, e);
    auto re = f.eval(d, e + h);
    j00 = (rd[0] - r[0]) / h;
    j10 = (rd[1] - r[1]) / h;
    j01 = (re[0] - r[0]) / h;
    j11 = (re[1] - r[1]) / h;
    Real det = j00 * j11 - j01 * j10;
    if (det == 0) break;
    Real sd = -(j11 * r[0] - j01 * r[1]) / det;
    Real se = -(-j10 * r[0] + j00 * r[1]) / det;
    Real damp = 1;
    bool moved = false;
    for (int tries = 0; tries < 60; ++tries) {
      try {
        auto rn = f.eval(d + damp * sd, e + damp * se);
        if (max_abs(rn) < max_abs(r) || max_abs(rn) < target) {
          d += damp * sd;
          e += damp * se;
          r = rn;
          moved = true;
          break;
        }
      } catch (const InvalidLayout&) {
      }
      damp /= 2;
    }
    if (max_abs(r) < target || !moved) break;
  }
  out.d = d;
  out.e = e;
  out.residual = max_abs(r);
  out.jacobian_det = j00 * j11 - j01 * j10;
  Eigen::Matrix2d J;
  J << j00.convert_to<double>(), j01.convert_to<double>(), j10.convert_to<double>(), j11.convert_to<double>();
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(J);
  out.condition = svd.singularValues()(0) / svd.singularValues()(1);
  if (!(out.residual < Real("1e-28"))) {
    throw NoConvergence("solve for (d, e) did not converge", hp::to_string(out.residual, 6));
  }
  // Newton error bound |J^-1| |F|, widened to an interval of width >= 1e-30.
  Real inv_norm = Real(1) / Real(svd.singularValues()(1));
  Real half = std::max(Real("5e-31"), Real(4 * inv_norm * out.residual));
  out.d_interval = {hp::to_string(d - half, 34), hp::to_string(d + half, 34)};
  out.e_interval = {hp::to_string(e - half, 34), hp::to_string(e + half, 34)};
  return out;
}

Sensitivity sensitivity(const Rational& a, const Rational& b, const Rational& c) {
  Sensitivity s;
  SolveResult base = solve_de(a, b, c);
  SolveResult moved = solve_de(a, b, c + Rational(1, 1000000));
  s.delta_c = 1e-6;
  s.delta_d = Real(moved.d - base.d).convert_to<double>();
  s.delta_e = Real(moved.e - base.e).convert_to<double>();
  s.condition = base.condition;
  return s;
}

Sim build_sim(const FoldParams& params) {
  FoldLayout lay = layout(params);
  band::FlatBand flat = lay.flat();
  std::vector<double> creases(flat.size() - 1, M_PI);
  band::ImmersedBand b = band::build_immersed(flat, creases, band::kTolClose);
  SimReport rep;
  rep.closure_residual = b.closure_residual();
  rep.lambda_minus_sqrt3 = lay.lambda - hp::sqrt3();
  Segment m1 = m1_segment(lay);
  rep.midpoint_offset = {(m1.p[0] + m1.q[0]) / 2 - lay.lines[0].q[0], (m1.p[1] + m1.q[1]) / 2 - lay.lines[0].q[1]};
  {
    const Segment& l1 = lay.lines[0];
    Real ux = l1.q[0] - l1.p[0], uy = l1.q[1] - l1.p[1];
    Real vx = m1.q[0] - m1.p[0], vy = m1.q[1] - m1.p[1];
    rep.perpendicularity = (ux * vx + uy * vy) / sqrt((ux * ux + uy * uy) * (vx * vx + vy * vy));
  }
  auto patterns = band::find_t_patterns(b);
  rep.pattern_count = patterns.size();
  if (patterns.empty()) throw DegeneratePattern("no T-pattern found on the folded band");
  rep.pattern = patterns.front();
  rep.normalization = band::normalize(b, rep.pattern);
  rep.properties = band::aspect_properties(rep.normalization);
  rep.lemma = band::lemma42_check(b, rep.normalization);
  for (int j = 1; j <= 2; ++j) {
    rep.max_backtrack = std::max(rep.max_backtrack, band::max_backtrack(band::pitch_profile(b, rep.normalization, j)));
  }
  try {
    rep.zero_slope_count = band::zero_slope_bends(b, rep.normalization).size();
  } catch (const NotSim&) {
    rep.zero_slope_count = 0;
  }
  rep.in_omegahat = slope::omegahat_contains(slope::SlopePair{rep.normalization.b, rep.normalization.t}, 1e-9);
  return Sim{std::move(b), std::move(rep)};
}

Sim build_default_sim() {
  SolveResult s = solve_de(default_a(), default_b(), default_c());
  return build_sim(with_de(default_a(), default_b(), default_c(), s.d, s.e));
}

std::string explicit_band_json(const FoldParams& params, int digits) {
  FoldLayout lay = layout(params);
  auto bends = lay.all_bends();
  auto str = [&](const Real& x) { return hp::to_string(x, digits); };
  nlohmann::json j;
  j["format"] = "explicit";
  j["lambda"] = str(lay.lambda);
  j["base"] = {str(Real(0)), str(params.a)};
  j["top"] = {str(lay.lambda), str(lay.lambda + params.a)};
  j["apexes"] = nlohmann::json::array();
  j["facets"] = nlohmann::json::array();
  // All creases are pi, so facet i is the flat triangle reflected in bends
  // i, i-1, ..., 1 (innermost first).
  for (std::size_t i = 0; i + 1 < bends.size(); ++i) {
    const Segment& lo = bends[i];
    const Segment& hi = bends[i + 1];
    bool left_shared = abs(lo.p[1] - hi.p[1]) < Real("1e-30");
    Point apex = left_shared ? lo.p : lo.q;
    Point start = left_shared ? lo.q : lo.p;
    Point end = left_shared ? hi.q : hi.p;
    j["apexes"].push_back({{"side", left_shared ? "left" : "right"}, {"height", str(apex[1])}});
    nlohmann::json facet = nlohmann::json::array();
    for (Point v : {apex, start, end}) {
      for (std::size_t k = i; k >= 1; --k) v = reflect(bends[k], v);
      facet.push_back({str(v[0]), str(v[1]), str(Real(0))});
    }
    j["facets"].push_back(facet);
  }
  return j.dump(2) + "\n";
}

}  // namespace moebius::example
