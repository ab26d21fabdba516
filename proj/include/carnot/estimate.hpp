#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace carnot {

/// Two-sided 95% standard-normal quantile.
inline constexpr double kZ95 = 1.959963984540054;

/// Monte Carlo estimate with a 95% normal confidence half-width.
struct Estimate {
  double mean = 0.0;
  double half_width = 0.0;
  long long n = 0;

  static Estimate exact(double value) { return {value, 0.0, 0}; }
};

Estimate mean_estimate(std::span<const double> values);

/// Estimate of a smooth statistic from its value and per-sample influence
/// values (delta method): half-width = z * sd(influence) / sqrt(n).
Estimate delta_estimate(double value, std::span<const double> influence);

/// Unbiased sample variance with a normal-theory CI from the fourth moment.
Estimate variance_estimate(std::span<const double> values);

double sample_mean(std::span<const double> values);
double sample_variance(std::span<const double> values);

/// Half-widths combined in quadrature.
double combine_half_widths(double a, double b);

/// z-quantile so that `family` two-sided intervals hold jointly at `level`
/// (Bonferroni).
double simultaneous_z(int family, double level = 0.95);

/// Rescales a 95% half-width to the simultaneous level for a family.
double widen_for_family(double half_width_95, int family, double level = 0.95);

/// Runs fn(i) for i in [0, count) on up to `threads` workers. Each index is
/// visited exactly once; callers write to per-index slots and reduce serially,
/// which keeps results independent of the thread count.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn);

}  // namespace carnot
