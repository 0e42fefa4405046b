#pragma once

#include <stdexcept>
#include <string>

namespace magdisk {

enum class ErrorCode {
  InvalidParams,
  NonConvergence,
  QuadratureFailure,
  BracketFailure,
  SingularPivot,
  MinimizationFailure,
  IllConditioned,
  NewtonDivergence,
  InsufficientData,
  Io,
};

const char* to_string(ErrorCode code);

// Every numerical failure in the library surfaces as this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParams: return "InvalidParams";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::BracketFailure: return "BracketFailure";
    case ErrorCode::SingularPivot: return "SingularPivot";
    case ErrorCode::MinimizationFailure: return "MinimizationFailure";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::NewtonDivergence: return "NewtonDivergence";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace magdisk
