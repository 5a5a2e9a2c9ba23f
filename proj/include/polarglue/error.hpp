#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polarglue {

enum class ErrorCode {
  InvalidArgument,
  OutOfWeilBounds,
  ReducibleInput,
  CharacteristicPrime,
  ReducibleField,
  InseparableInput,
  NotASquare,
  NotOrdinary,
  SquareField,
  SmallPrime,
  HypothesisViolated,
  NotGeometricallySimple,
  ReducibleEllipticInput,
  FactorizationTimeout,
  Overflow,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base exception for every failed precondition in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the Weil constructors; carries every violated bound, not just the first.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const noexcept { return violations_; }

 private:
  std::vector<std::string> violations_;
};

}  // namespace polarglue
