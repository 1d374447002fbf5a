#pragma once

#include <stdexcept>
#include <string>

namespace fwlab {

// Invalid scenario/transform/profile configuration; raised before any
// numerical work starts.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

// An eigenvalue sits inside the forbidden band around zero, so a sign,
// inverse or inverse-square-root operator is not defined.
class SpectralGapError : public std::runtime_error {
 public:
  SpectralGapError(const std::string &msg, double offending)
      : std::runtime_error(msg), offending_eigenvalue(offending) {}
  double offending_eigenvalue;
};

// A mathematical precondition of a transform failed (non-Hermitian
// generator, noncommuting even/odd parts, degenerate transverse momentum,
// broken SUSY structure, ...). Carries the measured residual.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string &msg, double res)
      : std::runtime_error(msg), residual(res) {}
  double residual;
};

// LAPACK failure or other numerical breakdown.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace fwlab
