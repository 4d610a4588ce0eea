#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace phaserqa {

enum class ErrorCode {
  kInvalidArgument,
  kInsufficientLength,
  kDegenerateVariance,
  kOutOfBounds,
  kIntegrationDivergence,
  kNoPlateau,
  kUndefinedRatio,
  kData,
  kParse,
  kIo,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the batch runner in particular) can report it without parsing
/// the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace phaserqa
