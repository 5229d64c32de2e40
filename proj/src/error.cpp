#include "fracgen/error.hpp"

namespace fracgen {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid argument";
    case ErrorCode::Parse: return "parse error";
    case ErrorCode::Domain: return "domain error";
    case ErrorCode::DegenerateGenerator: return "degenerate generator";
    case ErrorCode::InconsistentGenerator: return "inconsistent generator";
    case ErrorCode::OffGrid: return "off-grid evaluation";
  }
  return "unknown error";
}

}  // namespace fracgen
