#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "carnot/estimate.hpp"

namespace carnot {

enum class Verdict { Holds, HoldsWithinCI, Violated };

std::string_view to_string(Verdict v);

/// Outcome of one inequality check lhs <= rhs.
struct CheckReport {
  std::string name;
  Estimate lhs;
  Estimate rhs;
  /// rhs - lhs; half_width is the combined uncertainty including stencil_error.
  Estimate slack;
  double stencil_error = 0.0;
  Verdict verdict = Verdict::Holds;
  std::vector<std::pair<std::string, double>> parameters;
  std::vector<std::string> notes;

  double parameter(std::string_view key, double fallback = 0.0) const;
};

/// Relative allowance for rounding added to every slack half-width.
inline constexpr double kRoundingFloor = 1e-12;

/// holds when slack - hw >= 0, violated only when slack + hw < 0.
Verdict classify(double slack, double half_width);

/// Builds the report from the two sides: half-widths in quadrature plus the
/// stencil error added linearly.
CheckReport make_report(std::string name, Estimate lhs, Estimate rhs, double stencil_error = 0.0);

}  // namespace carnot
