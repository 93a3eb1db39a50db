#pragma once

// High-precision reals. Working precision comes from MOEBIUS_PRECISION_BITS
// (default 128), read once per process and applied to each thread on first use.

#include <string>

#include <boost/multiprecision/mpfr.hpp>
#include <gmpxx.h>

namespace moebius::hp {

using Real = boost::multiprecision::mpfr_float;

unsigned precision_bits();
void ensure_precision();

Real from_rational(const mpq_class& q);
Real sqrt3();
Real pi();

// Fixed significant-digit rendering.
std::string to_string(const Real& x, int digits);

}  // namespace moebius::hp
