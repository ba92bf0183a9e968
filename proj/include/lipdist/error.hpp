#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lipdist {

/// Raised when an input violates a documented precondition (bad parameter
/// range, mismatched dimensions, under-resolved grid). The CLI maps this to
/// exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Syntax error in a function spec string; `position` is the 0-based offset
/// of the offending token.
class SpecSyntaxError : public ValidationError {
 public:
  SpecSyntaxError(const std::string& message, std::size_t position)
      : ValidationError(message + " (at position " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace lipdist
