#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fca {

/// A caller broke a documented precondition (index outside the universe,
/// mismatched universes, unclarified input where clarified is required, ...).
struct ContractError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration refused to run because the input exceeds its
/// guard bound.
struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A reduction phase would leave the context without objects or attributes.
struct DegenerateContextError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Rejected `.cxt` input. `line` is 1-based.
class CxtParseError : public std::runtime_error {
 public:
  CxtParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace fca
