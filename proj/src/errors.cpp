#include "errors.hpp"

namespace ecf {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidTenor: return "InvalidTenor";
    case ErrorCode::InvalidAmount: return "InvalidAmount";
    case ErrorCode::InvalidDate: return "InvalidDate";
    case ErrorCode::EmptySchedule: return "EmptySchedule";
    case ErrorCode::MalformedSchedule: return "MalformedSchedule";
    case ErrorCode::KOutOfRange: return "KOutOfRange";
    case ErrorCode::SpeculativeDistortion: return "SpeculativeDistortion";
    case ErrorCode::BelowSearchFloor: return "BelowSearchFloor";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::InvalidRate: return "InvalidRate";
    case ErrorCode::NoCrossover: return "NoCrossover";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::UnknownInstrument: return "UnknownInstrument";
  }
  return "Unknown";
}

EcfError::EcfError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

void fail(ErrorCode code, const std::string& message) { throw EcfError(code, message); }

}  // namespace ecf
