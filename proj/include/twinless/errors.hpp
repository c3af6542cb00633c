#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace twinless {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed edge-list input. `line` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// The input graph does not satisfy what the operation requires
// (strong connectivity, twinless strong connectivity, enumeration budgets).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Bad ids or mismatched universes passed to an API.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace twinless
