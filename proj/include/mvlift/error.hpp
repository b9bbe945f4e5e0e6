#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mvlift {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: syntax, unknown identifiers, inconsistent dimensions.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public ValidationError {
 public:
  ParseError(std::size_t offset, std::size_t line, std::size_t column, const std::string& message);

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

/// A named mathematical precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  PreconditionError(std::string condition, const std::string& message);
  const std::string& condition() const { return condition_; }

 private:
  std::string condition_;
};

/// An identity the library guarantees failed. Always a defect.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace mvlift
