#pragma once

#include <stdexcept>
#include <string>

namespace treepeak {

enum class ErrorCode {
  MalformedInput,
  NotAPermutation,
  EmptyProfile,
  IndexOutOfRange,
  EmptySubset,
  SizeMismatch,
  InvalidDecomposition,
  NegativeCapacity,
  CandidateNotInSubset,
  NotFree,
  IllegalAttachment,
  InvalidK,
  NotSinglePeakedOnTree,
  TooManyLeaves,
  TooManyInternal,
  WrongScoringShape,
  TooLarge,
};

const char* error_code_name(ErrorCode code);

/// Library error carrying a machine-readable code; the CLI maps codes to
/// exit statuses and the "error: <code>: <message>" stderr line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace treepeak
