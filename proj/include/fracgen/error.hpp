#pragma once

#include <stdexcept>
#include <string>

namespace fracgen {

enum class ErrorCode {
  InvalidArgument,
  Parse,
  Domain,
  DegenerateGenerator,   // beta_0 == 0, the weight recurrence divides by it
  InconsistentGenerator, // sum of betas != 0, G_r has a pole at z = 0
  OffGrid,
};

const char* to_string(ErrorCode code) noexcept;

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

}  // namespace fracgen
