#include "nikolskii/error.hpp"

namespace nikolskii {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kOverflow: return "overflow";
    case ErrorCode::kRankDeficient: return "rank_deficient";
    case ErrorCode::kUnsupported: return "unsupported";
    case ErrorCode::kNotIntegrable: return "not_integrable";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

}  // namespace nikolskii
