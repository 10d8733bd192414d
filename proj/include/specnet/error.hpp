#pragma once

#include <stdexcept>
#include <string>

namespace specnet {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text (CSV rows, dates, numbers).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input violates a documented precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A numerical routine failed (singular system, no convergence, ...).
class NumericError : public Error {
 public:
  using Error::Error;
};

}  // namespace specnet
