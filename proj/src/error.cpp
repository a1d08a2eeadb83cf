#include "geocongest/error.hpp"

namespace geocongest {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::UnknownToken: return "UnknownToken";
    case ErrorCode::StackUnderflow: return "StackUnderflow";
    case ErrorCode::LeftoverOperands: return "LeftoverOperands";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::UnknownDensity: return "UnknownDensity";
    case ErrorCode::MissingParam: return "MissingParam";
    case ErrorCode::NonPositiveParam: return "NonPositiveParam";
    case ErrorCode::EmptyRealization: return "EmptyRealization";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::InvalidProbability: return "InvalidProbability";
    case ErrorCode::InvalidRadius: return "InvalidRadius";
    case ErrorCode::OddDegree: return "OddDegree";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::NonPositiveSample: return "NonPositiveSample";
    case ErrorCode::Unreachable: return "Unreachable";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

}  // namespace geocongest
