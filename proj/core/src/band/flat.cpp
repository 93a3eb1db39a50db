#include <cmath>

#include "moebius/band.hpp"

namespace moebius::band {

namespace {
constexpr double kHeightTol = 1e-9;
}

std::string to_string(Side s) { return s == Side::left ? "left" : "right"; }

Side side_from_string(const std::string& s) {
  if (s == "left" || s == "L") return Side::left;
  if (s == "right" || s == "R") return Side::right;
  throw ParseError("side must be left or right: " + s);
}

std::array<Vec2, 3> FlatTriangle::vertices() const {
  return {FlatBand::point(apex), FlatBand::point(ridge_start), FlatBand::point(ridge_end)};
}

Vec2 FlatBand::point(const BoundaryPoint& p) { return {p.side == Side::left ? 0.0 : 1.0, p.height}; }

FlatBand::FlatBand(double lambda, std::vector<Apex> apexes, double base_left, double base_right,
                   std::optional<std::pair<double, double>> top)
    : lambda_(lambda), base_left_(base_left), base_right_(base_right), apexes_(std::move(apexes)) {
  if (!(lambda_ > 0)) throw DegenerateBand("lambda must be positive");
  if (apexes_.size() < 2) throw DegenerateBand("a band needs at least two triangles");
  top_left_ = top ? top->first : base_right_ + lambda_;
  top_right_ = top ? top->second : base_left_ + lambda_;
  if (std::abs((top_left_ - base_left_) + (top_right_ - base_right_) - 2 * lambda_) > kHeightTol) {
    throw DegenerateBand("boundary length of the strip is not 2 lambda");
  }
  if (std::abs(std::abs(top_right_ - top_left_) - std::abs(base_right_ - base_left_)) > kHeightTol) {
    throw DegenerateBand("top and base bends differ in length");
  }
  const double top_left = top_left_;
  const double top_right = top_right_;
  double cur[2] = {base_left_, base_right_};
  for (std::size_t i = 0; i < apexes_.size(); ++i) {
    const Apex& a = apexes_[i];
    const int s = a.side == Side::left ? 0 : 1;
    const int o = 1 - s;
    if (std::abs(a.height - cur[s]) > kHeightTol) {
      throw DegenerateBand("apex " + std::to_string(i) + " is not at the current " + to_string(a.side) +
                           " vertex");
    }
    double end = o == 0 ? top_left : top_right;
    for (std::size_t j = i + 1; j < apexes_.size(); ++j) {
      if (apexes_[j].side != a.side) {
        end = apexes_[j].height;
        break;
      }
    }
    if (!(end > cur[o] + kHeightTol)) {
      throw DegenerateBand("triangle " + std::to_string(i) + " has an empty ridge");
    }
    const Side os = o == 0 ? Side::left : Side::right;
    FlatTriangle tri;
    tri.apex = {a.side, cur[s]};
    tri.ridge_start = {os, cur[o]};
    tri.ridge_end = {os, end};
    tri.sign = os == Side::right ? 1 : -1;
    triangles_.push_back(tri);
    cur[o] = end;
  }
  if (std::abs(cur[0] - top_left) > kHeightTol || std::abs(cur[1] - top_right) > kHeightTol) {
    throw DegenerateBand("triangulation does not reach the top bend");
  }
}

bool FlatBand::default_top() const {
  return std::abs(top_left_ - (base_right_ + lambda_)) <= kHeightTol &&
         std::abs(top_right_ - (base_left_ + lambda_)) <= kHeightTol;
}

double FlatBand::seam_kink() const {
  return std::abs(std::atan(top_right_ - top_left_) + std::atan(base_right_ - base_left_));
}

std::vector<int> FlatBand::signs() const {
  std::vector<int> out;
  for (const auto& t : triangles_) out.push_back(t.sign);
  return out;
}

FlatBend FlatBand::bend(double s) const {
  const int n = size();
  if (s < 0) s = 0;
  if (s > n) s = n;
  int i = std::min(static_cast<int>(std::floor(s)), n - 1);
  double u = s - i;
  const FlatTriangle& tri = triangles_[i];
  BoundaryPoint ridge{tri.ridge_start.side,
                      tri.ridge_start.height + u * (tri.ridge_end.height - tri.ridge_start.height)};
  FlatBend b;
  if (tri.apex.side == Side::left) {
    b.left = tri.apex;
    b.right = ridge;
  } else {
    b.left = ridge;
    b.right = tri.apex;
  }
  return b;
}

double FlatBand::boundary_coord(const BoundaryPoint& p) const {
  double u = p.side == Side::left ? p.height - base_left_ : (top_left_ - base_left_) + (p.height - base_right_);
  double period = 2 * lambda_;
  u = std::fmod(u, period);
  if (u < 0) u += period;
  return u;
}

}  // namespace moebius::band
