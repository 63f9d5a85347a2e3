#pragma once

#include <stdexcept>
#include <string>

namespace gammacop {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Wrong dimension, out-of-range argument, malformed input.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Mathematical domain violation (zero p_i at a corner, non-convergent
/// hypergeometric parameters, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A required hypothesis does not hold (p_i <= 0, p_[n] <= 0, ...). Distinct
/// from a negative verdict of a check that ran successfully.
class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The requested distribution does not exist for these parameters.
class ExistenceError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A model failed a gate (divisibility, kernel positivity, rectangle masses).
class ModelError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Internal invariant broken; should be unreachable for valid inputs.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Series or quadrature ran out of budget before reaching tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double partial, double est_error)
      : Error(what), partial_(partial), est_error_(est_error) {}

  double partial() const noexcept { return partial_; }
  double estimated_error() const noexcept { return est_error_; }

 private:
  double partial_;
  double est_error_;
};

/// Malformed model / marginals file.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace gammacop
