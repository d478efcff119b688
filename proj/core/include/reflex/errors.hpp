#ifndef REFLEX_ERRORS_HPP
#define REFLEX_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace reflex {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text. Carries a 1-based line/column when known.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line = 0, int column = 0)
      : Error(format(msg, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

private:
  static std::string format(const std::string& msg, int line, int column) {
    if (line <= 0) return msg;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + msg;
  }
  int line_;
  int column_;
};

/// Arithmetic that has no exact answer, e.g. inverting zero.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Operands live over different rings or free modules.
class RingMismatch : public Error {
public:
  using Error::Error;
};

/// The ring does not carry a flag an operation requires.
class UnsupportedRing : public Error {
public:
  using Error::Error;
};

/// A homological computation needed more steps than the configured bound.
class BoundExceeded : public Error {
public:
  using Error::Error;
};

/// Input violates a structural requirement (inhomogeneous, bad degrees, ...).
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// Reached a state that contradicts a proven invariant.
class InternalError : public Error {
public:
  using Error::Error;
};

}  // namespace reflex

#endif  // REFLEX_ERRORS_HPP
