#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fmb {

enum class ErrorCode {
  MissingPosition,
  TooFewFixed,
  DegenerateHull,
  NotPlanar,
  TooLarge,
  UnknownCell,
  NotAPath,
  NotACycle,
  NotACactus,
  CapExceeded,
  Unsupported,
  NotCollinear,
  ConstructionFailed,
  ConstructionIncomplete,
  Infeasible,
  DuplicateX,
  InfeasibleForAllPartitions,
  InvalidInput,
  InvalidSkeleton,
  ParseError,
  SchemaError,
  InvariantError,
  GenerationFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

// All library failures are reported through this one exception type; the
// code tells callers (and the CLI exit-code mapping) what went wrong.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fmb
