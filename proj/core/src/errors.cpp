#include "posmap/errors.hpp"

namespace posmap {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::NotRankOneProjector: return "NotRankOneProjector";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotReducible: return "NotReducible";
    case ErrorCode::NotSymmetry: return "NotSymmetry";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SingularSum: return "SingularSum";
    case ErrorCode::NotCanonical: return "NotCanonical";
    case ErrorCode::ResidualTooLarge: return "ResidualTooLarge";
    case ErrorCode::WeightViolation: return "WeightViolation";
    case ErrorCode::NonFinite: return "NonFinite";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code) {}

}  // namespace posmap
