#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sympow {

/// Base of every error the library raises on invalid input or exhausted limits.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// Malformed text input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const char* kind() const noexcept override { return "parse"; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// A configured resource limit would be exceeded ("desk scale exceeded").
class CapExceeded : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "cap"; }
};

/// Input violates an operation's precondition (wrong field, mismatched q, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "invalid-input"; }
};

}  // namespace sympow
