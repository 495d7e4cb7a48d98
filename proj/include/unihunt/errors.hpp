#pragma once

#include <stdexcept>
#include <string>

namespace unihunt {

// Malformed user input. line is 1-based, 0 when not tied to a file line.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Raised when computed data contradicts a mathematical invariant.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace unihunt
