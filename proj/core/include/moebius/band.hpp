#pragma once

// Polygonal Moebius bands: a triangulated strip of width 1 whose top and
// base bends are glued with a flip, its immersion by facets in 3-space, ridge
// curve, T-patterns, normalization and the derived estimates.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Geometry>

#include "moebius/errors.hpp"

namespace moebius::band {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Motion = Eigen::Isometry3d;

enum class Side { left, right };
std::string to_string(Side s);
Side side_from_string(const std::string& s);

// A point on the boundary of the strip: x = 0 (left) or x = 1 (right).
struct BoundaryPoint {
  Side side = Side::left;
  double height = 0;
};

struct Apex {
  Side side = Side::left;
  double height = 0;
};

// One triangle of the triangulation. Its ridge is the edge on the side
// opposite the apex.
struct FlatTriangle {
  BoundaryPoint apex, ridge_start, ridge_end;
  int sign = 1;  // -1 iff the ridge is on the left edge
  std::array<Vec2, 3> vertices() const;
};

// A bend: the segment from the left edge to the right edge of the strip.
struct FlatBend {
  BoundaryPoint left, right;
  double slope() const { return right.height - left.height; }
};

class FlatBand {
 public:
  // The base bend runs from (0, base_left) to (1, base_right). The top bend
  // (0, top_left) - (1, top_right) is glued to it with top-left ~ base-right
  // and top-right ~ base-left. By default it is the image of the base under
  // (x, y) -> (1 - x, y + lambda), which keeps the boundary straight.
  FlatBand(double lambda, std::vector<Apex> apexes, double base_left = 0, double base_right = 0,
           std::optional<std::pair<double, double>> top = std::nullopt);

  // Half the boundary length.
  double lambda() const { return lambda_; }
  double base_left() const { return base_left_; }
  double base_right() const { return base_right_; }
  double top_left() const { return top_left_; }
  double top_right() const { return top_right_; }
  bool default_top() const;
  // Turning of the boundary where it crosses the seam; 0 for a straight boundary.
  double seam_kink() const;
  const std::vector<Apex>& apexes() const { return apexes_; }
  const std::vector<FlatTriangle>& triangles() const { return triangles_; }
  int size() const { return static_cast<int>(triangles_.size()); }
  std::vector<int> signs() const;

  // Bend parameter s in [0, n]: s = i + u lies in triangle i.
  FlatBend bend(double s) const;
  // Arclength coordinate on the boundary circle, in [0, 2 lambda).
  double boundary_coord(const BoundaryPoint& p) const;
  static Vec2 point(const BoundaryPoint& p);

 private:
  double lambda_, base_left_, base_right_, top_left_, top_right_;
  std::vector<Apex> apexes_;
  std::vector<FlatTriangle> triangles_;
};

struct Facet {
  std::array<Vec3, 3> vertices;  // images of apex, ridge_start, ridge_end
};

class ImmersedBand {
 public:
  ImmersedBand(FlatBand flat, std::vector<Facet> facets);

  const FlatBand& flat() const { return flat_; }
  const std::vector<Facet>& facets() const { return facets_; }
  std::vector<int> signs() const { return flat_.signs(); }
  int size() const { return flat_.size(); }

  // Image of a flat point lying in triangle i.
  Vec3 image(int i, const Vec2& p) const;
  // Image of the bend at parameter s, as (left end, right end).
  std::pair<Vec3, Vec3> bend_image(double s) const;

  double isometry_residual() const;
  double shared_edge_residual() const;
  double closure_residual() const;
  bool planar(double tol = 1e-9) const;
  ImmersedBand transformed(const Motion& m) const;

 private:
  FlatBand flat_;
  std::vector<Facet> facets_;
  std::vector<Eigen::Affine3d> maps_;  // flat (x, y, 0) -> space, per facet
};

constexpr double kTolIso = 1e-9;
constexpr double kTolClose = 1e-9;

// creases[i] is the rotation about the bend shared by facets i and i + 1;
// pi folds flat, values near 0 leave the strip nearly unfolded.
ImmersedBand build_immersed(const FlatBand& flat, const std::vector<double>& creases,
                            double tol_close = kTolClose);
// Explicit facet coordinates; checks isometry, shared edges and closure.
ImmersedBand import_explicit(const FlatBand& flat, const std::vector<Facet>& facets,
                             double tol = kTolIso);

struct RidgeCurve {
  std::vector<Vec3> vertices;  // n + 1 points
  std::vector<Vec3> edges() const;
  double length() const;
  double min_vertex_norm() const;
  // max |distance from origin to edge line - 1|
  double tangency_defect() const;
  // Point (0, T', 0) on the curve after the frame rotation, if found.
  std::optional<double> y_axis_crossing() const;
};

// Starts at (B, 0, 0) for the base bend; rotated about X so that the first
// crossing of the plane X = 0 lies on the positive Y-axis.
RidgeCurve ridge_curve(const ImmersedBand& band);

struct TPattern {
  double s_b = 0, s_t = 0;  // bend parameters
  FlatBend bend_b, bend_t;
  std::array<Vec3, 2> image_b, image_t;
  double dot = 0;       // of unit directions
  double coplanar = 0;  // second equation residual
  double gap = 0;       // distance between the images
};

struct PatternOptions {
  int samples_per_facet = 32;
  double tol_detect = 1e-8;
  double tol_refine = 1e-12;
  double tol_param = 1e-10;
  double dedupe = 1e-6;
};

std::vector<TPattern> find_t_patterns(const ImmersedBand& band, const PatternOptions& opt = {});

struct Normalization {
  double B = 0, T = 0;
  double L1 = 0, R1 = 0, L2 = 0, R2 = 0, S1 = 0, S2 = 0;
  double x = 0, y = 0;
  double b = 0, t = 0;
  bool swapped = false;  // the 1 <-> 2 symmetry was applied to make y >= 0
  double s_b = 0, s_t = 0;
  Motion frame = Motion::Identity();  // space -> normalized frame
  double lambda_defect() const;       // lambda - (S1 + S2)/2, needs lambda
  double lambda = 0;
};

Normalization normalize(const ImmersedBand& band, const TPattern& tp);

struct TrapezoidLemma {
  Vec3 L_str, R_str, Theta, p;
  double L = 0, R = 0;
  double value = 0;          // B^2 - L^2 + (T - R)^2
  double sum_defect = 0;     // |R_str + L_str - (-B, T, 0)|
  double diff_defect = 0;    // |R_str - L_str - 2 Theta|
  std::array<double, 4> chain{};  // the Pythagorean chain, nondecreasing
  bool chain_holds = false;
};

std::array<TrapezoidLemma, 2> lemma42_check(const ImmersedBand& band, const Normalization& norm);

// Pitch angles along trapezoid j (1 or 2), from beta_b to beta_t.
std::vector<double> pitch_profile(const ImmersedBand& band, const Normalization& norm, int trapezoid,
                                  int samples_per_facet = 32);
// Largest deviation of theta_j2 from the interval spanned by theta_j1 and
// theta_j3 over j1 < j2 < j3.
double max_backtrack(const std::vector<double>& theta);

struct ZeroSlopeBend {
  int trapezoid = 1;
  double s = 0;
  FlatBend bend;
};
std::vector<ZeroSlopeBend> zero_slope_bends(const ImmersedBand& band, const Normalization& norm);

struct HullReport {
  bool degenerate = false;
  double min_angle = 0;
};
HullReport t_pattern_hull(const Normalization& norm);

struct AspectProperties {
  std::array<double, 2> S_margin{};  // S_j - (sqrt3 - b(1-2b)/3)
  bool statement1 = false, statement2 = false, statement3 = false;
  HullReport hull;
};
AspectProperties aspect_properties(const Normalization& norm, double tol = 1e-9);

// Built-in fixture: the triangular optimizer with lambda = sqrt3.
FlatBand fig11_flat();
ImmersedBand fig11_band();

// Band files (JSON, numbers as decimal strings).
struct BandFile {
  FlatBand flat;
  std::optional<std::vector<double>> creases;
  std::optional<std::vector<Facet>> facets;
};
BandFile parse_band_file(const std::string& text);
BandFile read_band_file(const std::string& path);
ImmersedBand load_band(const BandFile& f, double tol = kTolClose);
std::string write_band_file_folded(const FlatBand& flat, const std::vector<double>& creases);

}  // namespace moebius::band
