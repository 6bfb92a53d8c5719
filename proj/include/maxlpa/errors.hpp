#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxlpa {

// Out-of-domain argument to a generator, model or config (n = 0, p > 1, ...).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Experiment or run configuration rejected before any work starts.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed graph / sidecar / label file. line() is 1-based, 0 when unknown.
class FormatError : public std::runtime_error {
 public:
  FormatError(std::size_t line, const std::string& what)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace maxlpa
