#pragma once

#include <stdexcept>
#include <string>

namespace hominduce {

enum class ErrorCode {
  SpaceMismatch,
  ArityMismatch,
  NotADifferential,
  MissingProduct,
  MultipleFreeSlots,
  TypeCheckFailure,
  AxiomViolation,
  PreconditionFailed,
  WSCLost,
  NoSolution,
  TruncationUnsound,
  EmptyPerturbationSpace,
  BreakUnsatisfiable,
  DefectNonzero,
  NotClosed,
  TruncationTooTight,
  SizeLimit,
  InvalidInput,
};

const char* error_name(ErrorCode code);

/** Every failure in the library surfaces as this type; `code` drives CLI exit status. */
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hominduce
