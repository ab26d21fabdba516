#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace carnot {

/// Machine-readable failure categories. Every exception thrown by the library
/// carries one of these; the CLI prints its name next to the message.
enum class ErrorCode {
  InvalidSpec,
  SkewSymmetryViolation,
  DependentMatrices,
  NotBracketGenerating,
  NonPositiveScale,
  SyntaxError,
  UnknownVariable,
  LogOfNonPositive,
  DivisionByZero,
  OrderTooHigh,
  OrderExhausted,
  NonPositiveEpsilon,
  WBelowOne,
  RateNotPositive,
  NoPositiveRate,
  NegativeTime,
  NonPositiveDrift,
  NonPositiveFunction,
  NotHeisenberg,
  NewtonNoConvergence,
  InvalidArgument,
  Io,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string location = {});

  ErrorCode code() const noexcept { return code_; }
  /// JSON pointer, byte offset, or matrix index of the offending input; may be empty.
  const std::string& location() const noexcept { return location_; }

 private:
  ErrorCode code_;
  std::string location_;
};

}  // namespace carnot
