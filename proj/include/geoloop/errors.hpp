#pragma once

#include <stdexcept>
#include <string>

namespace geoloop {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on a numeric argument was violated (non-unit axis,
/// negative duration, non-normalized amplitudes, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be unitary is not.
class NotUnitary : public Error {
 public:
  using Error::Error;
};

/// The initial state does not return to itself up to a phase, so its total
/// phase is undefined.
class NonCyclic : public Error {
 public:
  using Error::Error;
};

/// A Bloch path whose first and last points differ.
class OpenPath : public Error {
 public:
  using Error::Error;
};

class ChiOutOfRange : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class MissingAccessory : public Error {
 public:
  using Error::Error;
};

class InvalidCoupling : public Error {
 public:
  using Error::Error;
};

/// Malformed schedule document. Line and column are 1-based; zero when the
/// position is unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    if (line <= 0) return message;
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
};

}  // namespace geoloop
