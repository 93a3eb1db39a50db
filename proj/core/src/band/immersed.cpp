#include <algorithm>
#include <cmath>

#include "moebius/band.hpp"

namespace moebius::band {

namespace {

Vec3 lift(const Vec2& p) { return {p.x(), p.y(), 0.0}; }

// Affine map taking the flat triangle (z = 0) onto the facet.
Eigen::Affine3d facet_map(const FlatTriangle& tri, const Facet& f) {
  auto p = tri.vertices();
  Eigen::Matrix<double, 3, 2> Q;
  Q.col(0) = f.vertices[1] - f.vertices[0];
  Q.col(1) = f.vertices[2] - f.vertices[0];
  Eigen::Matrix2d P;
  P.col(0) = p[1] - p[0];
  P.col(1) = p[2] - p[0];
  Eigen::Matrix<double, 3, 2> M = Q * P.inverse();
  Eigen::Matrix3d L;
  L.col(0) = M.col(0);
  L.col(1) = M.col(1);
  L.col(2) = M.col(0).cross(M.col(1));
  Eigen::Affine3d A = Eigen::Affine3d::Identity();
  A.linear() = L;
  A.translation() = f.vertices[0] - L * lift(p[0]);
  return A;
}

}  // namespace

ImmersedBand::ImmersedBand(FlatBand flat, std::vector<Facet> facets)
    : flat_(std::move(flat)), facets_(std::move(facets)) {
  if (static_cast<int>(facets_.size()) != flat_.size()) {
    throw DegenerateBand("facet count " + std::to_string(facets_.size()) + " does not match triangle count " +
                         std::to_string(flat_.size()));
  }
  for (int i = 0; i < flat_.size(); ++i) maps_.push_back(facet_map(flat_.triangles()[i], facets_[i]));
}

Vec3 ImmersedBand::image(int i, const Vec2& p) const { return maps_[i] * lift(p); }

std::pair<Vec3, Vec3> ImmersedBand::bend_image(double s) const {
  const int n = size();
  int i = std::clamp(static_cast<int>(std::floor(s)), 0, n - 1);
  FlatBend b = flat_.bend(s);
  return {image(i, FlatBand::point(b.left)), image(i, FlatBand::point(b.right))};
}

double ImmersedBand::isometry_residual() const {
  double worst = 0;
  for (int i = 0; i < size(); ++i) {
    auto p = flat_.triangles()[i].vertices();
    const auto& q = facets_[i].vertices;
    for (int k = 0; k < 3; ++k) {
      int l = (k + 1) % 3;
      double flat_len = (p[k] - p[l]).norm();
      double img_len = (q[k] - q[l]).norm();
      worst = std::max(worst, std::abs(flat_len - img_len));
    }
  }
  return worst;
}

double ImmersedBand::shared_edge_residual() const {
  double worst = 0;
  for (int i = 0; i + 1 < size(); ++i) {
    FlatBend b = flat_.bend(i + 1);
    for (const auto& e : {b.left, b.right}) {
      Vec2 p = FlatBand::point(e);
      worst = std::max(worst, (image(i, p) - image(i + 1, p)).norm());
    }
  }
  return worst;
}

double ImmersedBand::closure_residual() const {
  const int n = size();
  Vec3 top_left = image(n - 1, {0.0, flat_.top_left()});
  Vec3 top_right = image(n - 1, {1.0, flat_.top_right()});
  Vec3 base_left = image(0, {0.0, flat_.base_left()});
  Vec3 base_right = image(0, {1.0, flat_.base_right()});
  return std::max((top_left - base_right).norm(), (top_right - base_left).norm());
}

bool ImmersedBand::planar(double tol) const {
  const auto& f0 = facets_.front().vertices;
  Vec3 n0 = (f0[1] - f0[0]).cross(f0[2] - f0[0]).normalized();
  for (const auto& f : facets_) {
    for (const auto& v : f.vertices) {
      if (std::abs(n0.dot(v - f0[0])) > tol) return false;
    }
  }
  return true;
}

ImmersedBand ImmersedBand::transformed(const Motion& m) const {
  std::vector<Facet> out = facets_;
  for (auto& f : out) {
    for (auto& v : f.vertices) v = m * v;
  }
  return ImmersedBand(flat_, std::move(out));
}

ImmersedBand build_immersed(const FlatBand& flat, const std::vector<double>& creases, double tol_close) {
  const int n = flat.size();
  if (static_cast<int>(creases.size()) != n - 1) {
    throw DegenerateBand("expected " + std::to_string(n - 1) + " creases, got " + std::to_string(creases.size()));
  }
  for (double c : creases) {
    if (!(c > 0 && c < 2 * M_PI)) throw DegenerateBand("crease angles must lie in (0, 2 pi)");
  }
  std::vector<Facet> facets;
  Eigen::Affine3d A = Eigen::Affine3d::Identity();
  for (int i = 0; i < n; ++i) {
    if (i > 0) {
      FlatBend b = flat.bend(i);
      Vec3 p = lift(FlatBand::point(b.left));
      Vec3 axis = (lift(FlatBand::point(b.right)) - p).normalized();
      Eigen::Affine3d R = Eigen::Translation3d(p) * Eigen::AngleAxisd(creases[i - 1], axis) *
                          Eigen::Translation3d(-p);
      A = A * R;
    }
    auto v = flat.triangles()[i].vertices();
    Facet f;
    for (int k = 0; k < 3; ++k) f.vertices[k] = A * lift(v[k]);
    facets.push_back(f);
  }
  ImmersedBand band(flat, std::move(facets));
  double r = band.closure_residual();
  if (!(r <= tol_close)) throw ClosureFailure(r);
  return band;
}

ImmersedBand import_explicit(const FlatBand& flat, const std::vector<Facet>& facets, double tol) {
  ImmersedBand band(flat, facets);
  double iso = band.isometry_residual();
  if (!(iso <= tol)) {
    throw DegenerateBand("facets are not isometric to the flat triangles: residual " + std::to_string(iso));
  }
  double shared = band.shared_edge_residual();
  if (!(shared <= tol)) {
    throw DegenerateBand("consecutive facets do not share their bend: residual " + std::to_string(shared));
  }
  double r = band.closure_residual();
  if (!(r <= tol)) throw ClosureFailure(r);
  return band;
}

std::vector<Vec3> RidgeCurve::edges() const {
  std::vector<Vec3> out;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) out.push_back(vertices[i + 1] - vertices[i]);
  return out;
}

double RidgeCurve::length() const {
  double l = 0;
  for (const auto& e : edges()) l += e.norm();
  return l;
}

double RidgeCurve::min_vertex_norm() const {
  double m = INFINITY;
  for (const auto& v : vertices) m = std::min(m, v.norm());
  return m;
}

double RidgeCurve::tangency_defect() const {
  double worst = 0;
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    Vec3 d = vertices[i + 1] - vertices[i];
    double dist = vertices[i].cross(d).norm() / d.norm();
    worst = std::max(worst, std::abs(dist - 1));
  }
  return worst;
}

std::optional<double> RidgeCurve::y_axis_crossing() const {
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
    const Vec3& a = vertices[i];
    const Vec3& b = vertices[i + 1];
    if ((a.x() > 0) != (b.x() > 0) || a.x() == 0) {
      double s = a.x() == b.x() ? 0 : a.x() / (a.x() - b.x());
      Vec3 c = a + s * (b - a);
      if (std::abs(c.z()) > 1e-9 || c.y() <= 0) return std::nullopt;
      return c.y();
    }
  }
  return std::nullopt;
}

RidgeCurve ridge_curve(const ImmersedBand& band) {
  const int n = band.size();
  RidgeCurve rc;
  for (int i = 0; i <= n; ++i) {
    auto [l, r] = band.bend_image(i);
    rc.vertices.push_back(r - l);
  }
  for (const auto& e : rc.edges()) {
    if (e.norm() < 1e-12) throw DegenerateBand("ridge curve has a zero-length edge");
  }
  Eigen::Quaterniond q = Eigen::Quaterniond::FromTwoVectors(rc.vertices.front(), Vec3::UnitX());
  for (auto& v : rc.vertices) v = q * v;
  for (std::size_t i = 0; i + 1 < rc.vertices.size(); ++i) {
    const Vec3& a = rc.vertices[i];
    const Vec3& b = rc.vertices[i + 1];
    if ((a.x() > 0) != (b.x() > 0)) {
      Vec3 c = a + (a.x() / (a.x() - b.x())) * (b - a);
      Eigen::AngleAxisd rot(-std::atan2(c.z(), c.y()), Vec3::UnitX());
      for (auto& v : rc.vertices) v = rot * v;
      break;
    }
  }
  return rc;
}

}  // namespace moebius::band
