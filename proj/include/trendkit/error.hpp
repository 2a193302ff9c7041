#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trendkit {

enum class ErrorCode {
  // event validation
  MissingField,
  KindLineageMismatch,
  NonNumericTimestamp,
  RangeError,
  InvalidKind,
  // ingest
  IoError,
  ParseError,
  EmptyInput,
  InvalidWidth,
  // trending
  NonContiguousSnapshots,
  OddK,
  // growth
  ZeroDenominator,
  IndexOutOfRange,
  EmptySample,
  // statfit
  NonPositiveValue,
  TooFewPoints,
  TooFewDistinct,
  InsufficientTail,
  NonPositiveForLogBins,
  // spamdetect
  EmptySuspects,
  TooFewEvents,
  // synth
  ParamError,
  TargetNotFound,
  // cli
  UnknownSubcommand,
};

const char* error_code_name(ErrorCode code);

/// Pipeline error carrying a machine-checkable code. `line` is the 1-based
/// input line for parse failures, 0 when not applicable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0);

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::size_t line_;
};

}  // namespace trendkit
