#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dualnum {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed data, out-of-range arguments, unsupported sizes.
/// The CLI maps these to exit code 1.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// The computation itself failed. The CLI maps these to exit code 2.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of an elemental function.
class DomainError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DivisionByZeroError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// abs at 0 and similar kinks.
class NonDifferentiableError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A NaN component was observed on input to an operation.
class NanError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class SingularDerivativeError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DivergenceError : public NumericalError {
 public:
  DivergenceError(const std::string& what, std::size_t iterations)
      : NumericalError(what), iterations_(iterations) {}

  /// Number of iterates produced before the non-finite one.
  std::size_t iterations() const noexcept { return iterations_; }

 private:
  std::size_t iterations_;
};

class NonConvergenceError : public NumericalError {
 public:
  NonConvergenceError(const std::string& what, double residual)
      : NumericalError(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

class BlowUpError : public NumericalError {
 public:
  BlowUpError(const std::string& what, int step)
      : NumericalError(what), step_(step) {}

  int step() const noexcept { return step_; }

 private:
  int step_;
};

class NoExtremumError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class OutOfRangeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class UnsupportedSizeError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

}  // namespace dualnum
