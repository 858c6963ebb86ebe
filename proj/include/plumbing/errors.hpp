#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace plumbing {

// Bad input: malformed text, invalid graph, violated preconditions.
// The CLI maps these to exit code 1.
class ValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// A result contradicted a property that must hold by construction.
// Seeing one means a bug (or unvalidated input slipped through); exit code 2.
class ConsistencyError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class SingularMatrixError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

class ParseError : public ValidationError {
  public:
    ParseError(std::size_t line, const std::string& what)
        : ValidationError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

class PreconditionError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

} // namespace plumbing
