#pragma once

#include <stdexcept>
#include <string>

namespace cutsets {

/// An argument violates an operation's contract (wrong ground, bad range,
/// mismatched universes, malformed input).
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The input is structurally valid but exceeds a hard size limit.
/// Messages always name the limit; nothing is silently truncated.
class capacity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Family text-format reader error; carries the 1-based offending line.
class parse_error : public usage_error {
 public:
  parse_error(const std::string& what, int line)
      : usage_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace cutsets
