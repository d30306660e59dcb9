#pragma once

#include <stdexcept>
#include <string>

namespace critgen {

enum class ErrorCode {
  kOk = 0,
  kByteOutOfRange,
  kTruncatedPayload,
  kTrailingBits,
  kOversize,
  kBadVertex,
  kNotForced,
  kSeedNotFree,
  kNotACycle,
  kNotAnAntihole,
  kNotInClass,
  kTaxonomyViolation,
  kPreconditionViolated,
  kInternalContradiction,
  kUnknownName,
  kInvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace critgen
