#pragma once

#include <stdexcept>
#include <string>

namespace sinest {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad length, non-positive step, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Parameters for which a closed-form expression has a vanishing denominator.
class DegenerateParameters : public Error {
 public:
  using Error::Error;
};

/// Input data that cannot support the requested computation (constant record,
/// too few zero crossings, empty dichotomy).
class DegenerateData : public Error {
 public:
  using Error::Error;
};

/// Malformed CSV or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sinest
