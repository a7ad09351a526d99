#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace primdec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* error_class() const noexcept { return "error"; }
};

/// Caller violated an operation's precondition (bad ring, non-associated prime, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* error_class() const noexcept override { return "precondition"; }
};

class DimensionMismatch : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
  const char* error_class() const noexcept override { return "dimension_mismatch"; }
};

class ExponentOverflow : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
  const char* error_class() const noexcept override { return "exponent_overflow"; }
};

/// A lambda candidate was requested at a power that does not yet give a primary component.
class BelowThreshold : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
  const char* error_class() const noexcept override { return "below_threshold"; }
};

/// A configurable step or scan budget ran out. Never accompanied by a partial answer.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
  const char* error_class() const noexcept override { return "budget_exceeded"; }
};

/// A self-check failed. Signals a bug in an algorithm, not bad input.
class ConsistencyError : public Error {
 public:
  using Error::Error;
  const char* error_class() const noexcept override { return "internal_consistency"; }
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  const char* error_class() const noexcept override { return "parse"; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace primdec
