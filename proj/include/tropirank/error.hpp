#pragma once

#include <stdexcept>
#include <string>

namespace tropirank {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed arguments of the wrong shape, scale or value range.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Operation is undefined for the given value, e.g. inverting the zero element.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Input is well formed but violates a solver precondition (zero entries,
/// zero weights).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace tropirank
