#pragma once

// The explicit immersed band with aspect ratio below sqrt3, built from five
// fold lines in the lower half of a width-1 strip.

#include <array>
#include <string>
#include <vector>

#include "moebius/algebra.hpp"
#include "moebius/band.hpp"
#include "moebius/hp.hpp"

namespace moebius::example {

using algebra::Rational;
using hp::Real;
using Point = std::array<Real, 2>;

struct Segment {
  Point p, q;
};

struct FoldParams {
  Real a, b, c, d, e;
};

// Default instance: a = 5/27, b = 18/53, c = 33/128.
Rational default_a();
Rational default_b();
Rational default_c();

// Lines 1-5 join (0, hl) to (1, hr):
//   1: (0, 0)         - (1, a)
//   2: (0, 0)         - (1, a + b)
//   3: (0, c)         - (1, a + b)
//   4: (0, c)         - (1, a + b + d)
//   5: (0, a+b+d+e)   - (1, a + b + d)
// The upper half is the image under the half-turn (x, y) -> (1 - x, lambda + a - y).
struct FoldLayout {
  FoldParams params;
  std::array<Segment, 5> lines;
  Real lambda;  // (a + b + d + e) + (b + d)
  Segment half_turn(const Segment& s) const;
  // Bend lines of the full band, base to top (nine segments).
  std::vector<Segment> all_bends() const;
  band::FlatBand flat() const;
};

FoldLayout layout(const FoldParams& params);

// Reflection in the line through s.p and s.q.
Point reflect(const Segment& s, const Point& x);

// M1 = R2 R3 R4 (line 5); residual (R1(M11) - M12, R1(M12) - M11).
Segment m1_segment(const FoldLayout& l);
std::array<Real, 4> residual_map(const FoldLayout& l);

struct Interval30 {
  std::string lo, hi;
};

struct SolveResult {
  Real d, e;
  Real residual;
  int iterations = 0;
  Real jacobian_det;
  double condition = 0;
  Interval30 d_interval, e_interval;
};

SolveResult solve_de(const Rational& a, const Rational& b, const Rational& c);

struct Sensitivity {
  double delta_c = 1e-6;
  double delta_d = 0, delta_e = 0;
  double condition = 0;
};
Sensitivity sensitivity(const Rational& a, const Rational& b, const Rational& c);

struct SimReport {
  Real lambda_minus_sqrt3;
  std::array<Real, 2> midpoint_offset;  // midpoint of M1 minus (1, a), layout frame
  Real perpendicularity;                // dot of L1 and M1 directions
  band::TPattern pattern;
  band::Normalization normalization;
  band::AspectProperties properties;
  std::array<band::TrapezoidLemma, 2> lemma;
  double max_backtrack = 0;
  std::size_t zero_slope_count = 0;
  bool in_omegahat = false;
  double closure_residual = 0;
  std::size_t pattern_count = 0;
};

struct Sim {
  band::ImmersedBand band;
  SimReport report;
};

Sim build_sim(const FoldParams& params);
Sim build_default_sim();

// Explicit band file, every number a decimal string with the given digits.
std::string explicit_band_json(const FoldParams& params, int digits = 32);

}  // namespace moebius::example
