#include "syzlab/errors.hpp"

namespace syzlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "dimension-mismatch";
    case ErrorCode::kUnsupportedDegree: return "unsupported-degree";
    case ErrorCode::kDegenerateScroll: return "degenerate-scroll";
    case ErrorCode::kLiftOfTwistedSection: return "lift-of-twisted-section";
    case ErrorCode::kMalformedInput: return "malformed-input";
    case ErrorCode::kEmptyLinearSystem: return "empty-linear-system";
    case ErrorCode::kGenericityExhausted: return "genericity-exhausted";
    case ErrorCode::kModelInconsistency: return "model-inconsistency";
    case ErrorCode::kSampleExhausted: return "sample-exhausted";
    case ErrorCode::kInvalidSyzygy: return "invalid-syzygy";
    case ErrorCode::kSizeLimit: return "size-limit";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kParse: return "parse-error";
  }
  return "unknown";
}

}  // namespace syzlab
