#include "polarglue/error.hpp"

namespace polarglue {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OutOfWeilBounds: return "OutOfWeilBounds";
    case ErrorCode::ReducibleInput: return "ReducibleInput";
    case ErrorCode::CharacteristicPrime: return "CharacteristicPrime";
    case ErrorCode::ReducibleField: return "ReducibleField";
    case ErrorCode::InseparableInput: return "InseparableInput";
    case ErrorCode::NotASquare: return "NotASquare";
    case ErrorCode::NotOrdinary: return "NotOrdinary";
    case ErrorCode::SquareField: return "SquareField";
    case ErrorCode::SmallPrime: return "SmallPrime";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::NotGeometricallySimple: return "NotGeometricallySimple";
    case ErrorCode::ReducibleEllipticInput: return "ReducibleEllipticInput";
    case ErrorCode::FactorizationTimeout: return "FactorizationTimeout";
    case ErrorCode::Overflow: return "Overflow";
  }
  return "Unknown";
}

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += "; ";
    out += p;
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<std::string> violations)
    : Error(ErrorCode::OutOfWeilBounds, join(violations)), violations_(std::move(violations)) {}

}  // namespace polarglue
