#pragma once

#include <stdexcept>
#include <string>

namespace moebius {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroPolynomial : public Error {
 public:
  ZeroPolynomial() : Error("polynomial is identically zero") {}
};

class NotReducible : public Error {
 public:
  using Error::Error;
};

class PsiPole : public Error {
 public:
  PsiPole() : Error("psi has a pole: b - t + T = 0") {}
};

class ClosureFailure : public Error {
 public:
  explicit ClosureFailure(double residual)
      : Error("band does not close: residual " + std::to_string(residual)),
        residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

class DegenerateBand : public Error {
 public:
  using Error::Error;
};

class DegeneratePattern : public Error {
 public:
  using Error::Error;
};

class ProjectionDegenerate : public Error {
 public:
  using Error::Error;
};

class NotSim : public Error {
 public:
  using Error::Error;
};

class InvalidLayout : public Error {
 public:
  using Error::Error;
};

class NoConvergence : public Error {
 public:
  NoConvergence(const std::string& what, std::string residual)
      : Error(what + " (residual " + residual + ")"), residual_(std::move(residual)) {}
  const std::string& residual() const { return residual_; }

 private:
  std::string residual_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownCertificate : public Error {
 public:
  explicit UnknownCertificate(const std::string& name)
      : Error("unknown certificate: " + name) {}
};

}  // namespace moebius
