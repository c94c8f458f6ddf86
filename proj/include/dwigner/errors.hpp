#pragma once

#include <stdexcept>
#include <string>

namespace dwigner {

enum class ErrorCode {
  NotHermitian,
  NotUnitary,
  NotDensity,
  DimMismatch,
  OddDimension,
  NonHermitianResult,
  IndexOutOfRange,
  DegenerateSuperposition,
  NotNormalized,
  InconsistentTable,
  InvalidChannel,
  InvalidArgument,
  EmptyLine,
};

const char* to_string(ErrorCode code);

// Every precondition failure in the library is reported through this type.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace dwigner
