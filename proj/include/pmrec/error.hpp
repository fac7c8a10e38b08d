#pragma once

#include <stdexcept>
#include <string>

namespace pmrec {

// Stable error identifiers. The category (usage / data / runtime) drives the
// process exit code surfaced by the C API and the CLI.
enum class ErrorCode {
  // usage / configuration
  InvalidArgument,
  InvalidConfig,
  InvalidSpec,
  // data
  IoError,
  ParseError,
  FlowMissing,
  LengthMismatch,
  EmptySequence,
  // numeric / runtime
  PointBehindCamera,
  DegenerateConfiguration,
  NoConvergence,
  InsufficientConfidentPixels,
  AllPointsAtInfinity,
  DegenerateBaseline,
  IndeterminateDistance,
  EmptyMemory,
  DimensionMismatch,
  DuplicateFrame,
  EmptyValidRegion,
  DegenerateAlignment,
  NoValidPixels,
  TrajectoryTooShort,
  PnPFailure,
  PredictorFailure,
};

enum class ErrorCategory { Usage = 1, Data = 2, Runtime = 3 };

ErrorCategory error_category(ErrorCode code);
const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }
  ErrorCategory category() const { return error_category(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace pmrec
