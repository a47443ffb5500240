#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fgdef {

/// Malformed or out-of-contract input: unknown letters, unreduced words
/// where reduced ones are required, inconsistent structures.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Closed-form evaluation at a point where its denominator vanishes.
class SingularInputError : public InputError {
 public:
  using InputError::InputError;
};

/// Exhaustive computation refused because it exceeds the configured budget.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, std::int64_t max_feasible = -1)
      : std::runtime_error(what), max_feasible_(max_feasible) {}

  // Largest parameter value (radius, length bound) that fits in the budget,
  // or -1 when not applicable.
  std::int64_t max_feasible() const noexcept { return max_feasible_; }

 private:
  std::int64_t max_feasible_;
};

}  // namespace fgdef
