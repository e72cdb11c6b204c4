#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fondplus {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A model, problem, or policy violates one of its structural invariants.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Grounding found no reachable state satisfying the goal.
class GoalUnreachableError : public ModelError {
 public:
  using ModelError::ModelError;
};

/// Malformed input text. `line()` is 1-based, 0 when not attributable to a line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// A configured size cap (reachable states, oracle nodes) was exceeded.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace fondplus
