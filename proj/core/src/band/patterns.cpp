#include <algorithm>
#include <cmath>

#include "geom.hpp"
#include "moebius/band.hpp"

namespace moebius::band {

namespace {

struct Evaluator {
  const ImmersedBand& band;
  bool planar;
  Vec3 normal;

  // (dot of unit directions, second equation) for the ordered pair (s1, s2).
  // Non-planar bands: coplanarity. Planar bands: the midpoint of the second
  // image lies on the line of the first.
  Eigen::Vector2d operator()(double s1, double s2) const {
    auto [a1, b1] = band.bend_image(s1);
    auto [a2, b2] = band.bend_image(s2);
    Vec3 u1 = (b1 - a1).normalized();
    Vec3 u2 = (b2 - a2).normalized();
    double second;
    if (planar) {
      second = u1.cross(0.5 * (a2 + b2) - a1).dot(normal);
    } else {
      second = u1.cross(u2).dot(a2 - a1);
    }
    return {u1.dot(u2), second};
  }
};

bool line_hits_interior(const std::array<Vec3, 2>& line, const std::array<Vec3, 2>& seg) {
  auto c = detail::line_segment(line[0], line[1], seg[0], seg[1]);
  return c.dist < 1e-9 && c.s > 1e-9 && c.s < 1 - 1e-9;
}

double wrap(double s, int n) {
  double r = std::fmod(s, static_cast<double>(n));
  if (r < 0) r += n;
  if (r > n - 1e-12) r = 0;
  return r;
}

double circ_dist(double a, double b, int n) {
  double d = std::abs(a - b);
  return std::min(d, n - d);
}

}  // namespace

std::vector<TPattern> find_t_patterns(const ImmersedBand& band, const PatternOptions& opt) {
  const int n = band.size();
  const int m = opt.samples_per_facet;
  const int N = m * n;
  Evaluator F{band, band.planar(), Vec3::UnitZ()};
  if (F.planar) {
    const auto& f0 = band.facets().front().vertices;
    F.normal = (f0[1] - f0[0]).cross(f0[2] - f0[0]).normalized();
  }
  std::vector<Eigen::Vector2d> grid(static_cast<std::size_t>(N + 1) * (N + 1));
  auto at = [&](int k, int l) -> Eigen::Vector2d& { return grid[static_cast<std::size_t>(k) * (N + 1) + l]; };
  for (int k = 0; k <= N; ++k) {
    for (int l = 0; l <= N; ++l) at(k, l) = F(double(k) / m, double(l) / m);
  }
  const double margin = 1e-9;
  std::vector<std::pair<double, double>> roots;
  for (int k = 0; k < N; ++k) {
    for (int l = 0; l < N; ++l) {
      if (k / m == l / m) continue;
      bool straddle = true;
      for (int c = 0; c < 2 && straddle; ++c) {
        double lo = INFINITY, hi = -INFINITY;
        for (auto [dk, dl] : {std::pair{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
          double v = at(k + dk, l + dl)[c];
          lo = std::min(lo, v);
          hi = std::max(hi, v);
        }
        straddle = lo <= margin && hi >= -margin;
      }
      if (!straddle) continue;
      // Damped Newton with a finite-difference Jacobian.
      Eigen::Vector2d x((k + 0.5) / m, (l + 0.5) / m);
      Eigen::Vector2d fx = F(x[0], x[1]);
      bool ok = false;
      for (int it = 0; it < 60; ++it) {
        const double h = 1e-7;
        Eigen::Matrix2d J;
        for (int c = 0; c < 2; ++c) {
          Eigen::Vector2d xp = x, xm = x;
          xp[c] = std::min(x[c] + h, double(n));
          xm[c] = std::max(x[c] - h, 0.0);
          J.col(c) = (F(xp[0], xp[1]) - F(xm[0], xm[1])) / (xp[c] - xm[c]);
        }
        if (std::abs(J.determinant()) < 1e-300) break;
        Eigen::Vector2d step = J.partialPivLu().solve(-fx);
        double damp = 1;
        Eigen::Vector2d xn, fn;
        for (int tries = 0; tries < 30; ++tries) {
          xn = (x + damp * step).cwiseMax(0.0).cwiseMin(double(n));
          fn = F(xn[0], xn[1]);
          if (fn.norm() < fx.norm()) break;
          damp /= 2;
        }
        double moved = (xn - x).norm();
        x = xn;
        fx = fn;
        if (fx.lpNorm<Eigen::Infinity>() < opt.tol_refine && moved < opt.tol_param) {
          ok = true;
          break;
        }
        if (fx.lpNorm<Eigen::Infinity>() < opt.tol_refine * 1e-2) {
          ok = true;
          break;
        }
      }
      if (!ok || fx.lpNorm<Eigen::Infinity>() >= opt.tol_refine) continue;
      roots.emplace_back(wrap(x[0], n), wrap(x[1], n));
    }
  }

  std::vector<std::pair<TPattern, Normalization>> found;
  for (auto [s1, s2] : roots) {
    if (circ_dist(s1, s2, n) < opt.dedupe) continue;
    auto [a1, b1] = band.bend_image(s1);
    auto [a2, b2] = band.bend_image(s2);
    std::array<Vec3, 2> seg1{a1, b1}, seg2{a2, b2};
    auto c = detail::segment_segment(a1, b1, a2, b2);
    const double e = 1e-9;
    bool touch_end = c.s < e || c.s > 1 - e || c.t < e || c.t > 1 - e;
    if (c.dist < opt.tol_detect && !touch_end) continue;
    // The line of the top bend must miss the bottom bend's interior.
    bool first_ok = !line_hits_interior(seg2, seg1);
    bool second_ok = !line_hits_interior(seg1, seg2);
    double sb, st;
    if (first_ok && second_ok) {
      bool shorter2 = (b2 - a2).norm() <= (b1 - a1).norm();
      sb = shorter2 ? s1 : s2;
      st = shorter2 ? s2 : s1;
    } else if (first_ok) {
      sb = s1;
      st = s2;
    } else if (second_ok) {
      sb = s2;
      st = s1;
    } else {
      continue;
    }
    bool dup = false;
    for (const auto& [p, nrm] : found) {
      if (circ_dist(p.s_b, sb, n) < opt.dedupe && circ_dist(p.s_t, st, n) < opt.dedupe) dup = true;
    }
    if (dup) continue;
    TPattern tp;
    tp.s_b = sb;
    tp.s_t = st;
    tp.bend_b = band.flat().bend(sb);
    tp.bend_t = band.flat().bend(st);
    auto ib = band.bend_image(sb);
    auto it = band.bend_image(st);
    tp.image_b = {ib.first, ib.second};
    tp.image_t = {it.first, it.second};
    Eigen::Vector2d r = F(sb, st);
    tp.dot = r[0];
    tp.coplanar = r[1];
    tp.gap = c.dist;
    try {
      found.emplace_back(tp, normalize(band, tp));
    } catch (const DegeneratePattern&) {
    }
  }
  const double tie = 1e-9;
  std::stable_sort(found.begin(), found.end(), [&](const auto& p, const auto& q) {
    const Normalization& a = p.second;
    const Normalization& b = q.second;
    if (std::abs(std::abs(a.y) - std::abs(b.y)) > tie) return std::abs(a.y) < std::abs(b.y);
    if (std::abs(std::abs(a.x) - std::abs(b.x)) > tie) return std::abs(a.x) < std::abs(b.x);
    double ha = 0.5 * (p.first.bend_b.left.height + p.first.bend_b.right.height);
    double hb = 0.5 * (q.first.bend_b.left.height + q.first.bend_b.right.height);
    return ha < hb - tie;
  });
  std::vector<TPattern> out;
  for (auto& [p, nrm] : found) out.push_back(p);
  return out;
}

}  // namespace moebius::band
