#include "moebius/algebra/poly.hpp"

#include <sstream>

#include "moebius/errors.hpp"

namespace moebius::algebra {

Poly::Poly(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(Scalar c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

Poly Poly::monomial(Scalar c, int degree) {
  std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1);
  v.back() = std::move(c);
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Scalar();
  return c_[static_cast<std::size_t>(i)];
}

const Scalar& Poly::leading() const {
  if (c_.empty()) throw ZeroPolynomial();
  return c_.back();
}

Scalar Poly::operator()(const Scalar& x) const {
  Scalar acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

hp::Real Poly::eval(const hp::Real& x) const {
  hp::Real acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_hp();
  return acc;
}

double Poly::eval(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Scalar(static_cast<long>(i)));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  Scalar inv = leading().inverse();
  std::vector<Scalar> v = c_;
  for (auto& s : v) s *= inv;
  return Poly(std::move(v));
}

Poly Poly::compose_linear(const Scalar& a, const Scalar& b) const {
  Poly lin({b, a});
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= lin;
    acc += Poly(*it);
  }
  return acc;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& s : r.c_) s = -s;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (c_.empty() || o.c_.empty()) {
    c_.clear();
    return *this;
  }
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

std::string Poly::str(char var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c.str();
    if (i >= 1) os << "*" << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ZeroPolynomial();
  std::vector<Scalar> r = a.coeffs();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {Poly(), a};
  std::vector<Scalar> q(static_cast<std::size_t>(da - db) + 1);
  Scalar inv = b.leading().inverse();
  for (int k = da - db; k >= 0; --k) {
    Scalar f = r[static_cast<std::size_t>(k + db)] * inv;
    q[static_cast<std::size_t>(k)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

bool associated(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.degree() != b.degree()) return false;
  return divmod(a, b).second.is_zero() && divmod(b, a).second.is_zero();
}

}  // namespace moebius::algebra
