#pragma once

#include <stdexcept>
#include <string>

namespace casimir {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature exhausted its subdivision budget.
class NonConvergence : public Error {
 public:
  NonConvergence(const std::string& what, double value, double err_estimate)
      : Error(what), value_(value), err_estimate_(err_estimate) {}

  double value() const { return value_; }
  double err_estimate() const { return err_estimate_; }

 private:
  double value_;
  double err_estimate_;
};

/// |eps + 1| vanishes: evaluation on the surface-mode pole.
class SingularResponse : public Error {
 public:
  using Error::Error;
};

/// A small-m spectrum was queried beyond its validity cutoff.
class SpectrumCutoffExceeded : public Error {
 public:
  using Error::Error;
};

/// A closed form that assumes rho1 == rho2 was given unequal densities.
class UnequalDensities : public Error {
 public:
  using Error::Error;
};

}  // namespace casimir
