#ifndef GEOCONGEST_ERROR_HPP
#define GEOCONGEST_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace geocongest {

enum class ErrorCode {
  UnknownToken,
  StackUnderflow,
  LeftoverOperands,
  DomainError,
  UnknownDensity,
  MissingParam,
  NonPositiveParam,
  EmptyRealization,
  DegenerateInput,
  InvalidProbability,
  InvalidRadius,
  OddDegree,
  PreconditionViolated,
  DimensionMismatch,
  DisconnectedGraph,
  NonConvergence,
  NonPositiveSample,
  Unreachable,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace geocongest

#endif  // GEOCONGEST_ERROR_HPP
