#include "moebius/algebra/sturm.hpp"

#include <stdexcept>

#include "moebius/errors.hpp"

namespace moebius::algebra {

namespace {

// Divide by |leading coefficient|; positive scaling keeps every sign.
Poly normalized(const Poly& p) {
  if (p.is_zero()) return p;
  Scalar s = p.leading();
  if (s.sign() < 0) s = -s;
  Scalar inv = s.inverse();
  std::vector<Scalar> v = p.coeffs();
  for (auto& c : v) c *= inv;
  return Poly(std::move(v));
}

Rational abs_upper(const Scalar& s) {
  return abs(s.rational_part()) + 2 * abs(s.sqrt3_part());
}

Rational abs_lower_positive(const Scalar& s) {
  // A positive rational below |s| for s != 0, from rational enclosures of sqrt 3.
  static const Rational lo("1732050807/1000000000");
  static const Rational hi("1732050808/1000000000");
  Scalar a = s.sign() < 0 ? -s : s;
  const Rational& p = a.rational_part();
  const Rational& q = a.sqrt3_part();
  Rational v = p + (q >= 0 ? q * lo : q * hi);
  if (v > 0) return v;
  // Cancellation: |p + q sqrt3| = |norm| / |p - q sqrt3|.
  Rational denom = abs(p) + 2 * abs(q);
  return abs(a.norm()) / denom;
}

}  // namespace

std::vector<Poly> sturm_chain(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  std::vector<Poly> chain{normalized(p)};
  Poly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(normalized(d));
  while (true) {
    Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(normalized(-r));
  }
  return chain;
}

int sign_variations(const std::vector<Poly>& chain, const Scalar& x) {
  int count = 0;
  int prev = 0;
  for (const auto& q : chain) {
    int s = q(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

std::size_t sturm_count(const Poly& p, const Scalar& lo, const Scalar& hi, EvidenceLog* log) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (!(lo < hi)) throw std::invalid_argument("sturm_count requires lo < hi");
  Poly q = p;
  std::size_t extra = 0;
  while (q.degree() > 0 && q(lo).is_zero()) {
    q = divmod(q, Poly::linear_root(lo)).first;
    if (log) log->note("root at open endpoint " + lo.str() + " divided out exactly");
  }
  if (q.degree() > 0 && q(hi).is_zero()) {
    extra = 1;
    while (q.degree() > 0 && q(hi).is_zero()) q = divmod(q, Poly::linear_root(hi)).first;
    if (log) log->note("root at closed endpoint " + hi.str() + " divided out and counted");
  }
  auto chain = sturm_chain(q);
  int vlo = sign_variations(chain, lo);
  int vhi = sign_variations(chain, hi);
  std::size_t n = static_cast<std::size_t>(vlo - vhi) + extra;
  if (log) {
    log->note("sturm chain length " + std::to_string(chain.size()) + ", variations " +
              std::to_string(vlo) + " at " + lo.str() + ", " + std::to_string(vhi) + " at " + hi.str() +
              " -> " + std::to_string(n) + " root(s)");
  }
  return n;
}

Rational root_bound(const Poly& p) {
  if (p.is_zero()) throw ZeroPolynomial();
  Rational lead = abs_lower_positive(p.leading());
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs_upper(p.coeff(i)) / lead;
    if (r > m) m = r;
  }
  return m + 1;
}

std::size_t real_root_count(const Poly& p) {
  if (p.degree() <= 0) {
    if (p.is_zero()) throw ZeroPolynomial();
    return 0;
  }
  Rational m = root_bound(p);
  return sturm_count(p, Scalar(Rational(-m)), Scalar(m));
}

namespace {

void isolate_rec(const Poly& p, const Rational& lo, const Rational& hi, std::size_t count,
                 const Rational& width, std::vector<RationalInterval>& out) {
  if (count == 0) return;
  if (count == 1 && hi - lo <= width) {
    out.push_back({lo, hi});
    return;
  }
  Rational mid = (lo + hi) / 2;
  std::size_t left = sturm_count(p, Scalar(lo), Scalar(mid));
  isolate_rec(p, lo, mid, left, width, out);
  isolate_rec(p, mid, hi, count - left, width, out);
}

}  // namespace

std::vector<RationalInterval> isolate_roots(const Poly& p, const Rational& lo, const Rational& hi,
                                            const Rational& width, EvidenceLog* log) {
  if (p.is_zero()) throw ZeroPolynomial();
  if (width <= 0) throw std::invalid_argument("isolate_roots requires width > 0");
  std::size_t n = sturm_count(p, Scalar(lo), Scalar(hi), log);
  std::vector<RationalInterval> out;
  isolate_rec(p, lo, hi, n, width, out);
  if (log) log->note("isolated " + std::to_string(out.size()) + " root(s) to width <= " + width.get_str());
  return out;
}

}  // namespace moebius::algebra
