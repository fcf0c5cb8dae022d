#pragma once

#include <stdexcept>
#include <string>

namespace plumb {

// Base of everything the library throws. `code()` is the machine-readable
// tag surfaced by the CLI in JSON mode.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

// Bad user input: malformed text, invalid graphs, split or non-planar
// diagrams. CLI exit code 1.
class InputError : public Error {
 public:
  using Error::Error;
};

// An identity that must hold for every valid input did not. CLI exit code 2.
class InvariantError : public Error {
 public:
  explicit InvariantError(const std::string& message)
      : Error("invariant_violation", message) {}
};

}  // namespace plumb
