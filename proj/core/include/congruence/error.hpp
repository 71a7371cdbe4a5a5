#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace congruence {

enum class ErrorCode {
  InvalidArgument,
  NotPrime,
  ModulusMismatch,
  DenominatorNotInvertible,
  NotCoprime,
  NonUnit,
  IndexOutOfRange,
  IndexUnsupported,
  PrecisionUnsupported,
  PreconditionViolated,
  MethodUnsupported,
  CapExceeded,
  NotSquarefree,
  RangeExceeded,
  FactorizationFailed,
  UnknownClaim,
  CacheFormat,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library. The code names the contract that was
/// broken; the message names the offending values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace congruence
