#pragma once

#include <stdexcept>
#include <string>

namespace adlab {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Argument sits on a pole of the gamma function.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A non-finite value would escape a public operation.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Series or quadrature refinement did not reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// Index or parameter outside a table extent or a bound's validity range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Storage for a requested table could not be obtained.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Too few usable points for a regression.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

}  // namespace adlab
