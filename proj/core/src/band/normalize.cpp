#include <algorithm>
#include <cmath>

#include "geom.hpp"
#include "moebius/band.hpp"

namespace moebius::band {

namespace {

struct End {
  BoundaryPoint flat;
  Vec3 img;
  double u = 0;
};

double wrap(double s, int n) {
  double r = std::fmod(s, static_cast<double>(n));
  if (r < 0) r += n;
  return r;
}

std::array<End, 2> ends(const ImmersedBand& band, double s) {
  auto [l, r] = band.bend_image(s);
  FlatBend b = band.flat().bend(s);
  return {End{b.left, l, band.flat().boundary_coord(b.left)}, End{b.right, r, band.flat().boundary_coord(b.right)}};
}

double fwd(double from, double to, double period) {
  double d = std::fmod(to - from, period);
  if (d < 0) d += period;
  return d;
}

// Sweep through trapezoid j from beta_b to beta_t: forward for j = 1,
// backward for j = 2.
std::vector<double> sweep_params(const Normalization& nm, int n, int j, int m) {
  std::vector<double> out{nm.s_b};
  if (j == 1) {
    double end = nm.s_t > nm.s_b ? nm.s_t : nm.s_t + n;
    for (long k = static_cast<long>(std::floor(nm.s_b * m)) + 1; double(k) / m < end - 1e-12; ++k) {
      out.push_back(double(k) / m);
    }
    out.push_back(end);
  } else {
    double end = nm.s_t < nm.s_b ? nm.s_t : nm.s_t - n;
    for (long k = static_cast<long>(std::ceil(nm.s_b * m)) - 1; double(k) / m > end + 1e-12; --k) {
      out.push_back(double(k) / m);
    }
    out.push_back(end);
  }
  return out;
}

struct SweepPoint {
  End n_side, f_side;
  Vec3 v;  // n_side - f_side in the normalized (and for j = 2 mirrored) frame
};

struct Sweeper {
  const ImmersedBand& band;
  const Normalization& nm;
  double uN, uF;

  SweepPoint at(double sigma, int j) const {
    const int n = band.size();
    const double period = 2 * band.flat().lambda();
    auto e = ends(band, wrap(sigma, n));
    // The N-side end travels along the arc of length R_j starting at N.
    double d0 = j == 1 ? fwd(uN, e[0].u, period) : fwd(e[0].u, uN, period);
    double d1 = j == 1 ? fwd(uN, e[1].u, period) : fwd(e[1].u, uN, period);
    bool first_is_n = d0 <= d1;
    SweepPoint p;
    p.n_side = first_is_n ? e[0] : e[1];
    p.f_side = first_is_n ? e[1] : e[0];
    p.v = nm.frame.linear() * (p.n_side.img - p.f_side.img);
    if (j == 2) p.v = Vec3(p.v.x(), -p.v.y(), -p.v.z());
    return p;
  }
};

}  // namespace

double Normalization::lambda_defect() const { return lambda - 0.5 * (S1 + S2); }

Normalization normalize(const ImmersedBand& band, const TPattern& tp) {
  const double lam = band.flat().lambda();
  const double period = 2 * lam;
  auto eb = ends(band, tp.s_b);
  auto et = ends(band, tp.s_t);
  auto dist_to_t = [&](const Vec3& p) { return (p - detail::point_segment_foot(p, et[0].img, et[1].img)).norm(); };
  const bool first_near = dist_to_t(eb[0].img) <= dist_to_t(eb[1].img);
  const End& N = first_near ? eb[0] : eb[1];
  const End& F = first_near ? eb[1] : eb[0];
  Normalization nm;
  nm.lambda = lam;
  nm.s_b = tp.s_b;
  nm.s_t = tp.s_t;
  nm.B = (N.img - F.img).norm();
  nm.T = (et[0].img - et[1].img).norm();
  if (nm.B < 1e-12 || nm.T < 1e-12) throw DegeneratePattern("T-pattern bend image has zero length");
  const bool e0_first = fwd(N.u, et[0].u, period) <= fwd(N.u, et[1].u, period);
  const End& E1 = e0_first ? et[0] : et[1];
  const End& E2 = e0_first ? et[1] : et[0];
  nm.R1 = fwd(N.u, E1.u, period);
  nm.L2 = fwd(E1.u, F.u, period);
  nm.L1 = fwd(F.u, E2.u, period);
  nm.R2 = fwd(E2.u, N.u, period);
  nm.b = N.flat.height - F.flat.height;
  nm.t = nm.b + nm.R1 - nm.L1;

  Vec3 X = (N.img - F.img) / nm.B;
  Vec3 w = E1.img - E2.img;
  Vec3 Y = w - w.dot(X) * X;
  if (Y.norm() < 1e-12) throw DegeneratePattern("T-pattern bends are parallel");
  Y.normalize();
  Vec3 Z = X.cross(Y);
  Eigen::Matrix3d Rm;
  Rm.row(0) = X;
  Rm.row(1) = Y;
  Rm.row(2) = Z;
  nm.frame = Motion::Identity();
  nm.frame.linear() = Rm;
  nm.frame.translation() = -Rm * N.img;
  Vec3 mid = nm.frame * (0.5 * (E1.img + E2.img));
  nm.x = mid.x();
  nm.y = mid.y();
  if (nm.y < 0) {
    // Rotating by pi about the X-axis and sweeping the other way swaps the
    // two trapezoids and sends (x, y) to (x, -y).
    nm.swapped = true;
    nm.y = -nm.y;
    std::swap(nm.L1, nm.L2);
    std::swap(nm.R1, nm.R2);
    Motion flip = Motion::Identity();
    flip.linear() = Eigen::AngleAxisd(M_PI, Vec3::UnitX()).toRotationMatrix();
    nm.frame = flip * nm.frame;
  }
  nm.S1 = nm.L1 + nm.R1;
  nm.S2 = nm.L2 + nm.R2;
  return nm;
}

namespace {

// Trapezoid j of the unswapped labeling.
int raw_trapezoid(const Normalization& nm, int j) { return nm.swapped ? 3 - j : j; }

Sweeper make_sweeper(const ImmersedBand& band, const Normalization& nm) {
  // Recover N and F from the frame: N maps to the origin.
  auto eb = ends(band, nm.s_b);
  const bool first_n = (nm.frame * eb[0].img).norm() <= (nm.frame * eb[1].img).norm();
  return Sweeper{band, nm, first_n ? eb[0].u : eb[1].u, first_n ? eb[1].u : eb[0].u};
}

// The sweeper measures arcs against the unswapped R1/R2.
Normalization unswapped(const Normalization& nm) {
  Normalization u = nm;
  if (nm.swapped) {
    std::swap(u.L1, u.L2);
    std::swap(u.R1, u.R2);
    Motion flip = Motion::Identity();
    flip.linear() = Eigen::AngleAxisd(M_PI, Vec3::UnitX()).toRotationMatrix();
    u.frame = flip * nm.frame;
    u.y = -nm.y;
    u.swapped = false;
  }
  return u;
}

}  // namespace

std::array<TrapezoidLemma, 2> lemma42_check(const ImmersedBand& band, const Normalization& norm) {
  std::array<TrapezoidLemma, 2> out;
  const Normalization raw = unswapped(norm);
  Sweeper sw = make_sweeper(band, raw);
  const int n = band.size();
  for (int j = 1; j <= 2; ++j) {
    int rj = raw_trapezoid(norm, j);
    TrapezoidLemma& r = out[j - 1];
    r.L_str = r.R_str = Vec3::Zero();
    auto params = sweep_params(raw, n, rj, 1);
    SweepPoint prev = sw.at(params.front(), rj);
    for (std::size_t k = 1; k < params.size(); ++k) {
      SweepPoint cur = sw.at(params[k], rj);
      Vec3 dv = cur.v - prev.v;
      const double period = 2 * band.flat().lambda();
      double moved_n = std::abs(fwd(prev.n_side.u, cur.n_side.u, period));
      moved_n = std::min(moved_n, period - moved_n);
      if (moved_n > 1e-12) {
        r.R_str += dv;
      } else {
        r.L_str += dv;
      }
      prev = cur;
    }
    // With the orientation of trapezoid j, (x, y) appears as (x, +-y).
    double yj = j == 1 ? norm.y : -norm.y;
    r.L = j == 1 ? norm.L1 : norm.L2;
    r.R = j == 1 ? norm.R1 : norm.R2;
    r.Theta = Vec3(norm.B / 2 + norm.x, yj, 0);
    r.p = Vec3(norm.B, 0, 0) + r.R_str;
    r.value = norm.B * norm.B - r.L * r.L + (norm.T - r.R) * (norm.T - r.R);
    r.sum_defect = (r.R_str + r.L_str - Vec3(-norm.B, norm.T, 0)).norm();
    r.diff_defect = (r.R_str - r.L_str - 2 * r.Theta).norm();
    Vec3 zeta(0, norm.T, 0);
    r.chain = {(Vec3(norm.B, r.R, 0) - zeta).norm(), (Vec3(norm.B + norm.x, r.R_str.norm(), 0) - zeta).norm(),
               (r.p - zeta).norm(), r.L};
    r.chain_holds = true;
    for (int k = 0; k + 1 < 4; ++k) r.chain_holds = r.chain_holds && r.chain[k] <= r.chain[k + 1] + 1e-9;
  }
  return out;
}

std::vector<double> pitch_profile(const ImmersedBand& band, const Normalization& norm, int trapezoid,
                                  int samples_per_facet) {
  if (trapezoid != 1 && trapezoid != 2) throw std::invalid_argument("trapezoid index must be 1 or 2");
  const Normalization raw = unswapped(norm);
  Sweeper sw = make_sweeper(band, raw);
  int rj = raw_trapezoid(norm, trapezoid);
  std::vector<double> theta;
  for (double sigma : sweep_params(raw, band.size(), rj, samples_per_facet)) {
    Vec3 v = sw.at(sigma, rj).v;
    double len = std::hypot(v.x(), v.y());
    if (len < 1e-9) throw ProjectionDegenerate("bend image is vertical; its projection is degenerate");
    double a = std::atan2(v.y(), v.x());
    if (!theta.empty()) {
      while (a - theta.back() > M_PI) a -= 2 * M_PI;
      while (a - theta.back() < -M_PI) a += 2 * M_PI;
    }
    theta.push_back(a);
  }
  return theta;
}

double max_backtrack(const std::vector<double>& theta) {
  const std::size_t n = theta.size();
  if (n < 3) return 0;
  std::vector<double> pmin(n), pmax(n), smin(n), smax(n);
  pmin[0] = pmax[0] = theta[0];
  for (std::size_t i = 1; i < n; ++i) {
    pmin[i] = std::min(pmin[i - 1], theta[i]);
    pmax[i] = std::max(pmax[i - 1], theta[i]);
  }
  smin[n - 1] = smax[n - 1] = theta[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) {
    smin[i] = std::min(smin[i + 1], theta[i]);
    smax[i] = std::max(smax[i + 1], theta[i]);
  }
  double worst = 0;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    double above = theta[j] - std::max(pmin[j - 1], smin[j + 1]);
    double below = std::min(pmax[j - 1], smax[j + 1]) - theta[j];
    worst = std::max({worst, above, below});
  }
  return worst;
}

std::vector<ZeroSlopeBend> zero_slope_bends(const ImmersedBand& band, const Normalization& norm) {
  if (!(norm.b > 0 && norm.t < 0)) throw NotSim("slopes (b, t) are not in the quadrant b > 0, t < 0");
  const Normalization raw = unswapped(norm);
  Sweeper sw = make_sweeper(band, raw);
  const double period = 2 * band.flat().lambda();
  std::vector<ZeroSlopeBend> out;
  for (int j = 1; j <= 2; ++j) {
    int rj = raw_trapezoid(norm, j);
    auto slope = [&](double sigma) {
      SweepPoint p = sw.at(sigma, rj);
      double r = rj == 1 ? fwd(sw.uN, p.n_side.u, period) : fwd(p.n_side.u, sw.uN, period);
      double l = rj == 1 ? fwd(sw.uF, p.f_side.u, period) : fwd(p.f_side.u, sw.uF, period);
      return raw.b + r - l;
    };
    auto params = sweep_params(raw, band.size(), rj, 32);
    for (std::size_t k = 0; k + 1 < params.size(); ++k) {
      double lo = params[k], hi = params[k + 1];
      double flo = slope(lo), fhi = slope(hi);
      if (flo > 0 && fhi <= 0) {
        for (int it = 0; it < 200 && std::abs(hi - lo) > 1e-12; ++it) {
          double mid = 0.5 * (lo + hi);
          (slope(mid) > 0 ? lo : hi) = mid;
        }
        double s = wrap(0.5 * (lo + hi), band.size());
        out.push_back({j, s, band.flat().bend(s)});
      }
    }
  }
  return out;
}

HullReport t_pattern_hull(const Normalization& nm) {
  HullReport h;
  h.degenerate = std::abs(nm.y) >= nm.T / 2;
  Vec2 p[3] = {{-nm.B, 0}, {nm.x, nm.y - nm.T / 2}, {nm.x, nm.y + nm.T / 2}};
  double m = M_PI;
  for (int k = 0; k < 3; ++k) {
    Vec2 a = p[(k + 1) % 3] - p[k], b = p[(k + 2) % 3] - p[k];
    m = std::min(m, std::acos(std::clamp(a.dot(b) / (a.norm() * b.norm()), -1.0, 1.0)));
  }
  h.min_angle = m;
  return h;
}

AspectProperties aspect_properties(const Normalization& nm, double tol) {
  AspectProperties a;
  double bound = std::sqrt(3.0) - nm.b * (1 - 2 * nm.b) / 3;
  a.S_margin = {nm.S1 - bound, nm.S2 - bound};
  a.statement1 = a.S_margin[0] >= -tol && a.S_margin[1] >= -tol;
  a.statement2 = nm.x < 1.0 / 18 && std::abs(nm.y) < 1.0 / 30;
  a.hull = t_pattern_hull(nm);
  a.statement3 = !a.hull.degenerate && a.hull.min_angle > M_PI / 4;
  return a;
}

FlatBand fig11_flat() {
  const double r = std::sqrt(3.0);
  return FlatBand(r, {{Side::left, 0}, {Side::right, 1 / r}, {Side::left, 2 / r}, {Side::right, r}});
}

ImmersedBand fig11_band() { return build_immersed(fig11_flat(), {M_PI, M_PI, M_PI}); }

}  // namespace moebius::band
