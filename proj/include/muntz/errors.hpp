#pragma once

#include <stdexcept>
#include <string>

namespace muntz {

// Error taxonomy shared by all modules. Codes let tests and the CLI
// distinguish usage mistakes from numerical failures.
enum class ErrorCode {
  HorizonExceeded,
  HorizonTooSmall,
  NonpositiveGap,
  EmptyGrid,
  PoleProximity,
  TruncationInsufficient,
  SieveViolation,
  Overflow,
  DomainViolation,
  Nonconvergent,
  InsufficientSamples,
  IllConditioned,
  BadConfig,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace muntz
