#include "mvlift/error.hpp"

namespace mvlift {

ParseError::ParseError(std::size_t offset, std::size_t line, std::size_t column, const std::string& message)
    : ValidationError("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      offset_(offset),
      line_(line),
      column_(column) {}

PreconditionError::PreconditionError(std::string condition, const std::string& message)
    : Error(condition + ": " + message), condition_(std::move(condition)) {}

}  // namespace mvlift
