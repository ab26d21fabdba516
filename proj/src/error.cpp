#include "carnot/error.hpp"

namespace carnot {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::SkewSymmetryViolation: return "SkewSymmetryViolation";
    case ErrorCode::DependentMatrices: return "DependentMatrices";
    case ErrorCode::NotBracketGenerating: return "NotBracketGenerating";
    case ErrorCode::NonPositiveScale: return "NonPositiveScale";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    case ErrorCode::LogOfNonPositive: return "LogOfNonPositive";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::OrderTooHigh: return "OrderTooHigh";
    case ErrorCode::OrderExhausted: return "OrderExhausted";
    case ErrorCode::NonPositiveEpsilon: return "NonPositiveEpsilon";
    case ErrorCode::WBelowOne: return "WBelowOne";
    case ErrorCode::RateNotPositive: return "RateNotPositive";
    case ErrorCode::NoPositiveRate: return "NoPositiveRate";
    case ErrorCode::NegativeTime: return "NegativeTime";
    case ErrorCode::NonPositiveDrift: return "NonPositiveDrift";
    case ErrorCode::NonPositiveFunction: return "NonPositiveFunction";
    case ErrorCode::NotHeisenberg: return "NotHeisenberg";
    case ErrorCode::NewtonNoConvergence: return "NewtonNoConvergence";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace {
std::string compose(ErrorCode code, const std::string& message, const std::string& location) {
  std::string out(to_string(code));
  out += ": ";
  out += message;
  if (!location.empty()) {
    out += " (at ";
    out += location;
    out += ")";
  }
  return out;
}
}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::string location)
    : std::runtime_error(compose(code, message, location)), code_(code), location_(std::move(location)) {}

}  // namespace carnot
