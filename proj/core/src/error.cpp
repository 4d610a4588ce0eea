#include "phaserqa/error.hpp"

namespace phaserqa {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kInsufficientLength: return "insufficient length";
    case ErrorCode::kDegenerateVariance: return "degenerate variance";
    case ErrorCode::kOutOfBounds: return "out of bounds";
    case ErrorCode::kIntegrationDivergence: return "integration divergence";
    case ErrorCode::kNoPlateau: return "no plateau";
    case ErrorCode::kUndefinedRatio: return "undefined ratio";
    case ErrorCode::kData: return "data error";
    case ErrorCode::kParse: return "parse error";
    case ErrorCode::kIo: return "i/o error";
  }
  return "unknown error";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace phaserqa
