#pragma once

#include <stdexcept>
#include <string>

namespace thinfilm {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at a pole or zero that makes the result undefined.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Query outside the range of tabulated data.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file; the message carries the source and line number.
class ParseError : public Error {
 public:
  using Error::Error;
};

class BracketError : public Error {
 public:
  using Error::Error;
};

/// Operation invoked on an object in the wrong state (e.g. an unconverged mode).
class StateError : public Error {
 public:
  using Error::Error;
};

}  // namespace thinfilm
