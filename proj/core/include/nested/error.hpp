#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nested {

/// Malformed group data: bad tables, bad presentations, bad file syntax.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  /// 1-based line of the offending input, 0 when not tied to a file.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A power-commutator presentation whose relations do not define a group of
/// the declared order.
class InconsistentPresentation : public InputError {
 public:
  using InputError::InputError;
};

/// The group is larger than the configured order cap for an operation.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(const std::string& op, std::size_t order, std::size_t cap)
      : std::runtime_error(op + ": group order " + std::to_string(order) +
                           " exceeds cap " + std::to_string(cap)) {}
};

/// Violated internal postcondition (e.g. eigenspace splitting stalled).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace nested
