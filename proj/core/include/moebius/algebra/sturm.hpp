#pragma once

#include <string>
#include <vector>

#include "moebius/algebra/poly.hpp"

namespace moebius::algebra {

struct EvidenceLog {
  std::vector<std::string> lines;
  void note(std::string line) { lines.push_back(std::move(line)); }
};

// Half-open interval (lo, hi].
struct RationalInterval {
  Rational lo;
  Rational hi;
};

std::vector<Poly> sturm_chain(const Poly& p);
int sign_variations(const std::vector<Poly>& chain, const Scalar& x);

// Number of distinct real roots of p in (lo, hi]. A root at lo is divided out
// exactly and a root at hi is divided out and counted; both are logged.
std::size_t sturm_count(const Poly& p, const Scalar& lo, const Scalar& hi, EvidenceLog* log = nullptr);

// Rational M with every real root of p in (-M, M).
Rational root_bound(const Poly& p);
std::size_t real_root_count(const Poly& p);

// Disjoint intervals (lo, hi], each holding exactly one root, each of length <= width.
std::vector<RationalInterval> isolate_roots(const Poly& p, const Rational& lo, const Rational& hi,
                                            const Rational& width, EvidenceLog* log = nullptr);

}  // namespace moebius::algebra
