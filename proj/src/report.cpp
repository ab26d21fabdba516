#include "carnot/report.hpp"

#include <cmath>

namespace carnot {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::HoldsWithinCI: return "holds-within-CI";
    case Verdict::Violated: return "violated";
  }
  return "unknown";
}

double CheckReport::parameter(std::string_view key, double fallback) const {
  for (const auto& [k, v] : parameters) {
    if (k == key) return v;
  }
  return fallback;
}

Verdict classify(double slack, double half_width) {
  if (!std::isfinite(slack)) return slack > 0 ? Verdict::Holds : Verdict::Violated;
  if (slack - half_width >= 0.0) return Verdict::Holds;
  if (slack + half_width < 0.0) return Verdict::Violated;
  return Verdict::HoldsWithinCI;
}

CheckReport make_report(std::string name, Estimate lhs, Estimate rhs, double stencil_error) {
  CheckReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.stencil_error = stencil_error;
  r.slack.mean = rhs.mean - lhs.mean;
  // The last term absorbs floating-point rounding when both sides agree exactly.
  const double rounding = std::isfinite(lhs.mean) && std::isfinite(rhs.mean)
                              ? kRoundingFloor * (std::abs(lhs.mean) + std::abs(rhs.mean))
                              : 0.0;
  r.slack.half_width = combine_half_widths(lhs.half_width, rhs.half_width) + stencil_error + rounding;
  r.slack.n = std::max(lhs.n, rhs.n);
  r.verdict = classify(r.slack.mean, r.slack.half_width);
  return r;
}

}  // namespace carnot
