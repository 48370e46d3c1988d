#pragma once

#include <stdexcept>
#include <string>

namespace qudit {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible (non-square, mismatched, not d x d).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument is outside its admissible domain (bad d, label, alpha...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A matrix failed a state/operator invariant (Hermiticity, trace, positivity).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// An iterative numeric routine did not converge.
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace qudit
