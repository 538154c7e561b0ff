#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace derivring {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands from different rings, shape mismatches, indices out of range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A ring descriptor that does not have 2 invertible (or is otherwise ill-formed).
class InvalidRing : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of an algorithm was not met, e.g. an unvalidated witness family.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Malformed or non-canonical serialized input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(line == 0 ? what
                        : what + " (line " + std::to_string(line) + ", column " +
                              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  /// 1-based position of the error, 0 when the error is structural rather than lexical.
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace derivring
