#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nikolskii {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kOverflow,
  kRankDeficient,
  kUnsupported,
  kNotIntegrable,
  kIo,
};

std::string_view to_string(ErrorCode code);

/// Library-wide exception. Every throw site in the core uses this type so that
/// front ends can map failures to a stable machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

inline void require(bool condition, ErrorCode code, const std::string& message) {
  if (!condition) fail(code, message);
}

}  // namespace nikolskii
