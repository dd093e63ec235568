#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace plh {

enum class ErrorCode {
  InvalidArgument,
  ParseError,
  KindMismatch,
  ModulusMismatch,
  InvalidMap,
  UnboundGenerator,
  NonIntervalSupport,
  NonArcSupport,
  NotAChain,
  CannotUnroll,
  NotMinipotent,
  PreconditionViolation,
  InvalidConjugationWitness,
};

std::string_view to_string(ErrorCode code);

// Single exception type for the library; `code()` names the failing contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace plh
