#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pmaps {

// Exception hierarchy. Every error the library raises derives from
// pmaps::Error so front ends can map classes onto exit statuses.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A computation would exceed a configured bound (group order, coset count).
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, std::size_t limit)
      : Error(what + " (limit " + std::to_string(limit) + ")"), limit_(limit) {}
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::size_t limit_;
};

/// A precondition of an operation does not hold for its arguments.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Text input could not be parsed. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        message_(msg),
        line_(line),
        column_(column) {}
  const std::string& message() const noexcept { return message_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::string message_;
  std::size_t line_;
  std::size_t column_;
};

/// A proven structural theorem failed to hold on computed data. This always
/// indicates a bug in the library, never bad input.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// A quotient map did not match any of the recognised reference shapes.
class ClassificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace pmaps
