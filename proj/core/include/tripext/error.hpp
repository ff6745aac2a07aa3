#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tripext {

enum class ErrorCode {
  InvalidSize,
  UnknownVertex,
  InvalidEdge,
  NotApplicable,
  InvalidInput,
  InvalidInstance,
  NotDivisible,
  InvalidTargets,
  PreconditionViolated,
  InvalidFactorization,
  CapExceeded,
  Internal,
};

std::string_view to_string(ErrorCode code);

// Thrown for contract violations on inputs. Search outcomes such as
// "infeasible" are returned as values, never thrown.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tripext
