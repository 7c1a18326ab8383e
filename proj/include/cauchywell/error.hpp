#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cauchywell {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid configuration value (tolerances, sizes, options).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative or limiting procedure did not reach its tolerance.
/// Carries the best estimate obtained and an error bound for it.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double estimate, double error_bound)
      : std::runtime_error(what), estimate_(estimate), error_bound_(error_bound) {}

  double estimate() const noexcept { return estimate_; }
  double error_bound() const noexcept { return error_bound_; }

 private:
  double estimate_;
  double error_bound_;
};

class QuadratureError : public ConvergenceError {
 public:
  using ConvergenceError::ConvergenceError;
};

/// Eigenvalue iteration failed; index() names the eigenvalue that did not converge.
class EigenError : public std::runtime_error {
 public:
  EigenError(const std::string& what, std::size_t index)
      : std::runtime_error(what), index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

/// Solver output violates a structural expectation (e.g. parity alternation).
class StructureError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cauchywell
