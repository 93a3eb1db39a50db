#pragma once

#include <algorithm>
#include <cmath>

#include "moebius/band.hpp"

namespace moebius::band::detail {

struct Closest {
  double dist = 0;
  double s = 0, t = 0;  // parameters on the first and second carrier
};

// Closest points of segments p0p1 and q0q1.
inline Closest segment_segment(const Vec3& p0, const Vec3& p1, const Vec3& q0, const Vec3& q1) {
  Vec3 d1 = p1 - p0, d2 = q1 - q0, r = p0 - q0;
  double a = d1.squaredNorm(), e = d2.squaredNorm(), f = d2.dot(r);
  double c = d1.dot(r), b = d1.dot(d2);
  double denom = a * e - b * b;
  double s = denom > 1e-300 ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
  double t = (b * s + f) / e;
  if (t < 0) {
    t = 0;
    s = std::clamp(-c / a, 0.0, 1.0);
  } else if (t > 1) {
    t = 1;
    s = std::clamp((b - c) / a, 0.0, 1.0);
  }
  return {((p0 + s * d1) - (q0 + t * d2)).norm(), s, t};
}

// Closest points of the infinite line through q0q1 and the segment p0p1;
// s is the parameter on the segment.
inline Closest line_segment(const Vec3& q0, const Vec3& q1, const Vec3& p0, const Vec3& p1) {
  Vec3 d1 = p1 - p0, d2 = (q1 - q0).normalized(), r = p0 - q0;
  double a = d1.squaredNorm(), b = d1.dot(d2), c = d1.dot(r);
  double denom = a - b * b;
  double s = denom > 1e-300 ? std::clamp((b * d2.dot(r) - c) / denom, 0.0, 1.0) : 0.0;
  Vec3 p = p0 + s * d1;
  Vec3 w = p - q0;
  return {(w - w.dot(d2) * d2).norm(), s, w.dot(d2)};
}

inline Vec3 point_segment_foot(const Vec3& x, const Vec3& a, const Vec3& b) {
  Vec3 d = b - a;
  double s = std::clamp((x - a).dot(d) / d.squaredNorm(), 0.0, 1.0);
  return a + s * d;
}

}  // namespace moebius::band::detail
