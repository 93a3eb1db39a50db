#include "moebius/algebra/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace moebius::algebra {

int Scalar::sign() const {
  int sp = sgn(p_);
  int sq = sgn(q_);
  if (sq == 0) return sp;
  if (sp == 0) return sq;
  if (sp == sq) return sp;
  // Opposite signs: compare p^2 with 3 q^2.
  int c = cmp(Rational(p_ * p_), Rational(3 * q_ * q_));
  return c == 0 ? 0 : (c > 0 ? sp : sq);
}

int scalar_sign(const Scalar& x) { return x.sign(); }

Scalar Scalar::ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  p_ += o.p_;
  q_ += o.q_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  p_ -= o.p_;
  q_ -= o.q_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (o.q_ == 0) {
    p_ *= o.p_;
    q_ *= o.p_;
    return *this;
  }
  Rational p = p_ * o.p_ + 3 * q_ * o.q_;
  Rational q = p_ * o.q_ + q_ * o.p_;
  p_ = std::move(p);
  q_ = std::move(q);
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(sqrt 3)");
  Rational n = norm();
  return {p_ / n, -q_ / n};
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.q_ == 0) {
    if (o.p_ == 0) throw std::domain_error("division by zero in Q(sqrt 3)");
    p_ /= o.p_;
    q_ /= o.p_;
    return *this;
  }
  return *this *= o.inverse();
}

std::optional<Rational> rational_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  if (x == 0) return Rational(0);
  const mpz_class& n = x.get_num();
  const mpz_class& d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return std::nullopt;
  mpz_class rn = sqrt(n);
  mpz_class rd = sqrt(d);
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

std::optional<Scalar> Scalar::exact_sqrt() const {
  if (sign() < 0) return std::nullopt;
  if (is_zero()) return Scalar();
  if (q_ == 0) {
    if (auto r = rational_sqrt(p_)) return Scalar(*r);
    if (auto r = rational_sqrt(p_ / 3)) return Scalar(0, *r);
    return std::nullopt;
  }
  // (u + v sqrt3)^2 = u^2 + 3 v^2 + 2uv sqrt3, so u^2 = (p +- sqrt(p^2 - 3q^2)) / 2.
  auto disc = rational_sqrt(norm());
  if (!disc) return std::nullopt;
  for (const Rational& u2 : {Rational((p_ + *disc) / 2), Rational((p_ - *disc) / 2)}) {
    auto u = rational_sqrt(u2);
    if (!u || *u == 0) continue;
    Scalar cand(*u, q_ / (2 * *u));
    if (cand.sign() < 0) cand = -cand;
    if (cand * cand == *this) return cand;
  }
  return std::nullopt;
}

double Scalar::to_double() const { return to_hp().convert_to<double>(); }

hp::Real Scalar::to_hp() const {
  if (q_ == 0) return hp::from_rational(p_);
  return hp::from_rational(p_) + hp::from_rational(q_) * hp::sqrt3();
}

std::string Scalar::str() const {
  std::ostringstream os;
  if (q_ == 0) {
    os << p_;
  } else if (p_ == 0) {
    os << q_ << "*sqrt3";
  } else {
    os << "(" << p_ << (q_ > 0 ? " + " : " - ") << abs(q_) << "*sqrt3)";
  }
  return os.str();
}

Rational parse_rational(const std::string& text) {
  // Accepts integers, n/d and plain decimals such as -0.125 or 1e-3.
  std::string s = text;
  if (s.empty()) throw std::invalid_argument("empty rational");
  if (s.find('/') != std::string::npos) {
    Rational r(s);
    r.canonicalize();
    return r;
  }
  int exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    exp10 = std::stoi(s.substr(epos + 1));
    s = s.substr(0, epos);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<int>(s.size() - dot - 1);
    s.erase(dot, 1);
  }
  if (s.empty() || s == "-" || s == "+") throw std::invalid_argument("bad rational: " + text);
  if (s[0] == '+') s.erase(0, 1);
  mpz_class n(s, 10);
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  Rational r = exp10 < 0 ? Rational(n, p10) : Rational(n * p10);
  r.canonicalize();
  return r;
}

}  // namespace moebius::algebra
