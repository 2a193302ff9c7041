#include "trendkit/error.hpp"

namespace trendkit {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::MissingField: return "MissingField";
    case ErrorCode::KindLineageMismatch: return "KindLineageMismatch";
    case ErrorCode::NonNumericTimestamp: return "NonNumericTimestamp";
    case ErrorCode::RangeError: return "RangeError";
    case ErrorCode::InvalidKind: return "InvalidKind";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidWidth: return "InvalidWidth";
    case ErrorCode::NonContiguousSnapshots: return "NonContiguousSnapshots";
    case ErrorCode::OddK: return "OddK";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::NonPositiveValue: return "NonPositiveValue";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::TooFewDistinct: return "TooFewDistinct";
    case ErrorCode::InsufficientTail: return "InsufficientTail";
    case ErrorCode::NonPositiveForLogBins: return "NonPositiveForLogBins";
    case ErrorCode::EmptySuspects: return "EmptySuspects";
    case ErrorCode::TooFewEvents: return "TooFewEvents";
    case ErrorCode::ParamError: return "ParamError";
    case ErrorCode::TargetNotFound: return "TargetNotFound";
    case ErrorCode::UnknownSubcommand: return "UnknownSubcommand";
  }
  return "UnknownError";
}

Error::Error(ErrorCode code, const std::string& message, std::size_t line)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code),
      line_(line) {}

}  // namespace trendkit
