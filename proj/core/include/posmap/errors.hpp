#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace posmap {

enum class ErrorCode {
  NotHermitian,
  NoConvergence,
  DimensionMismatch,
  NotUnitary,
  NotRankOneProjector,
  NotNormalized,
  NotReducible,
  NotSymmetry,
  OutOfRange,
  SingularSum,
  NotCanonical,
  ResidualTooLarge,
  WeightViolation,
  NonFinite,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Exception type for every failing precondition in the library. The code
/// identifies the failure class; the message carries the specifics.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace posmap
