#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fedosov {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed literal text; carries a 1-based line and column.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Evaluation at a point where a denominator vanishes.
class PoleError : public Error {
 public:
  using Error::Error;
};

/// An input violates the documented precondition of an operation.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A linear system that was required to be consistent has no solution.
class NoSolutionError : public Error {
 public:
  using Error::Error;
};

/// The request is well formed but outside what the operation supports.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

/// Input data does not match the declared schema (dimensions, valences).
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace fedosov
