#pragma once

#include <string>
#include <utility>
#include <vector>

#include "moebius/algebra.hpp"

namespace moebius::cert {

using algebra::Rational;

enum class Method { exact_identity, sturm, interval, numeric_eval };
std::string to_string(Method m);
Method method_from_string(const std::string& s);

using Witness = std::vector<std::pair<std::string, std::string>>;

struct Step {
  std::string description;
  std::string claim;
  Method method = Method::numeric_eval;
  bool passed = false;
  Witness witness;

  const std::string* find(const std::string& key) const;
};

struct Verdict {
  std::string name;
  bool passed = true;
  std::vector<Step> steps;
  std::vector<std::string> deviations;

  void add(Step s);
  const Step* find_step(const std::string& description) const;
};

// Polynomials as printed alongside the inequalities they certify.
algebra::MPoly printed_P();
algebra::Poly printed_P2_on_Z();
algebra::Poly printed_P1_on_Z();
algebra::Poly printed_three_quarters_P_on_Z();            // literal
algebra::Poly corrected_three_quarters_P_on_Z();          // -2b^2 read as -2b^3
algebra::Poly printed_degree8();
algebra::Poly printed_quartic();

Verdict verify_slope_theorem();
Verdict verify_aspect_statement1();
// The x-bound pipeline alone, parameterized by the candidate bound.
Verdict verify_x_bound(const Rational& x);
Verdict verify_xy_bounds();
Verdict verify_triangle_statement3();
// excess is added to the aspect-ratio bound (0 for the plain chain).
Verdict verify_pitch_constant(const Rational& excess = Rational(0));

std::vector<std::string> certificate_names();
// Throws UnknownCertificate for names outside certificate_names().
Verdict run_certificate(const std::string& name);

}  // namespace moebius::cert
