#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conjcat {

// Malformed text input. `position` is a byte offset into the parsed text.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A grammar or construction precondition does not hold.
class GrammarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configurable work cap was exceeded; the question was not answered.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace conjcat
