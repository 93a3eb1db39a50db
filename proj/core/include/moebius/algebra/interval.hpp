#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace moebius::algebra {

// Closed double interval; every operation widens by one ulp on each side so
// the true real result is always enclosed.
class Interval {
 public:
  Interval() = default;
  Interval(double v) : lo_(v), hi_(v) {}  // NOLINT(google-explicit-constructor)
  Interval(double lo, double hi) : lo_(lo), hi_(hi) {
    if (lo > hi) throw std::invalid_argument("empty interval");
  }

  double lo() const { return lo_; }
  double hi() const { return hi_; }
  double width() const { return hi_ - lo_; }
  bool positive() const { return lo_ > 0; }
  bool negative() const { return hi_ < 0; }
  bool contains(double x) const { return lo_ <= x && x <= hi_; }

  friend Interval operator+(const Interval& a, const Interval& b) { return widen(a.lo_ + b.lo_, a.hi_ + b.hi_); }
  friend Interval operator-(const Interval& a, const Interval& b) { return widen(a.lo_ - b.hi_, a.hi_ - b.lo_); }
  friend Interval operator-(const Interval& a) { return {-a.hi_, -a.lo_}; }
  friend Interval operator*(const Interval& a, const Interval& b) {
    double p[] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    double lo = p[0], hi = p[0];
    for (double v : p) {
      lo = std::fmin(lo, v);
      hi = std::fmax(hi, v);
    }
    return widen(lo, hi);
  }
  friend Interval operator/(const Interval& a, const Interval& b) {
    if (b.lo_ <= 0 && b.hi_ >= 0) throw std::domain_error("interval division by an interval containing 0");
    return a * widen(1.0 / b.hi_, 1.0 / b.lo_);
  }
  friend Interval sqrt(const Interval& a) {
    if (a.hi_ < 0) throw std::domain_error("sqrt of a negative interval");
    return widen(std::sqrt(std::fmax(a.lo_, 0.0)), std::sqrt(a.hi_));
  }
  friend Interval square(const Interval& a) {
    if (a.lo_ >= 0) return widen(a.lo_ * a.lo_, a.hi_ * a.hi_);
    if (a.hi_ <= 0) return widen(a.hi_ * a.hi_, a.lo_ * a.lo_);
    double m = std::fmax(-a.lo_, a.hi_);
    return widen(0.0, m * m);
  }

 private:
  static Interval widen(double lo, double hi) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    Interval r;
    r.lo_ = std::nextafter(lo, -inf);
    r.hi_ = std::nextafter(hi, inf);
    return r;
  }
  double lo_ = 0;
  double hi_ = 0;
};

}  // namespace moebius::algebra
