#pragma once

#include <stdexcept>
#include <string>

namespace n3l {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: out-of-range points, duplicates, malformed strings.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Operation called on a geometry kind it does not support.
class UnsupportedGeometry : public Error {
 public:
  using Error::Error;
};

/// Board exceeds the size an exhaustive routine is willing to handle.
class Refused : public Error {
 public:
  using Error::Error;
};

/// A construction produced a placement that failed verification.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace n3l
