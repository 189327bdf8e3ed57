#pragma once

#include <stdexcept>
#include <string>

namespace homcat {

// Malformed input file or option value. `line` is 1-based, 0 when the
// error is not tied to a specific line.
struct ParseError : std::runtime_error {
  int line;
  explicit ParseError(const std::string& msg, int line_ = 0)
      : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
        line(line_) {}
};

// A counting operation was invoked on inputs that violate the hypotheses
// it is only valid under. The message names the failing condition.
struct CheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace homcat
