#pragma once

#include <stdexcept>
#include <string>

namespace ramified {

/// Argument outside the documented domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Argument sits on (or numerically at) a pole of the evaluated function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Work required exceeds a configured cap (term count, entry count).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical procedure could not reach its tolerance.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature did not meet its tolerance.
class QuadratureError : public PrecisionError {
 public:
  using PrecisionError::PrecisionError;
};

}  // namespace ramified
