#pragma once

#include <stdexcept>
#include <string>

namespace symcap {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kDimension,
  kDomain,
  kPrecondition,
  kNoConvergence,
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace symcap
