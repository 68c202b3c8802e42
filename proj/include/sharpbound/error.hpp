#pragma once

#include <stdexcept>
#include <string>

namespace sharpbound {

enum class ErrorCode {
  InvalidArgument,
  UnknownFunction,
  DegenerateInterval,
  DomainViolation,
  NearSingular,
  StepBudget,
  MissingExact,
  Usage,
  Io,
};

/// Exception type thrown by every module of the core library. The code maps
/// one-to-one onto the C API status values.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace sharpbound
