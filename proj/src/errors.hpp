#pragma once

#include <stdexcept>
#include <string>

namespace ecf {

enum class ErrorCode {
  InvalidTenor,
  InvalidAmount,
  InvalidDate,
  EmptySchedule,
  MalformedSchedule,
  KOutOfRange,
  SpeculativeDistortion,
  BelowSearchFloor,
  NoConvergence,
  InvalidRate,
  NoCrossover,
  InvalidConfig,
  UnknownInstrument,
};

/// Stable machine-readable name ("InvalidTenor", "SpeculativeDistortion", ...).
const char* error_name(ErrorCode code);

class EcfError : public std::runtime_error {
 public:
  EcfError(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

}  // namespace ecf
