#include "moebius/hp.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

namespace moebius::hp {

unsigned precision_bits() {
  static const unsigned bits = [] {
    const char* env = std::getenv("MOEBIUS_PRECISION_BITS");
    if (env == nullptr) return 128u;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || v < 64) return 128u;
    return static_cast<unsigned>(v);
  }();
  return bits;
}

void ensure_precision() {
  // The default precision of mpfr_float is per thread.
  thread_local bool done = false;
  if (done) return;
  auto digits10 = static_cast<unsigned>(std::ceil(precision_bits() * std::log10(2.0)));
  Real::default_precision(digits10);
  done = true;
}

Real from_rational(const mpq_class& q) {
  ensure_precision();
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

Real sqrt3() {
  ensure_precision();
  return boost::multiprecision::sqrt(Real(3));
}

Real pi() {
  ensure_precision();
  Real r;
  mpfr_const_pi(r.backend().data(), MPFR_RNDN);
  return r;
}

std::string to_string(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits);
  os << x;
  return os.str();
}

}  // namespace moebius::hp
