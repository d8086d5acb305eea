#pragma once

#include <stdexcept>
#include <string>

namespace transcert {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold for the inputs.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Input lies outside the convergence domain of a series.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A search that is guaranteed to succeed by theory came back empty.
/// Distinct from PreconditionError so callers can tell bad input from a
/// solver defect.
class SolverFailure : public Error {
 public:
  using Error::Error;
};

/// Finite p-adic precision was exhausted before a result could be certified.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input. `pointer` is a JSON pointer to the
/// offending field when one is known.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::string pointer = {})
      : Error(pointer.empty() ? message : pointer + ": " + message),
        pointer_(std::move(pointer)) {}

  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

}  // namespace transcert
