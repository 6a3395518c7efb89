#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace syzlab {

enum class ErrorCode {
  kDimensionMismatch,
  kUnsupportedDegree,
  kDegenerateScroll,
  kLiftOfTwistedSection,
  kMalformedInput,
  kEmptyLinearSystem,
  kGenericityExhausted,
  kModelInconsistency,
  kSampleExhausted,
  kInvalidSyzygy,
  kSizeLimit,
  kInvalidArgument,
  kParse,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to a message or exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace syzlab
