#include "carnot/estimate.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include <boost/math/distributions/normal.hpp>

#include "carnot/error.hpp"

namespace carnot {

double sample_mean(std::span<const double> values) {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

double sample_variance(std::span<const double> values) {
  if (values.size() < 2) return 0.0;
  const double mean = sample_mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(values.size() - 1);
}

Estimate mean_estimate(std::span<const double> values) {
  Estimate e;
  e.n = static_cast<long long>(values.size());
  e.mean = sample_mean(values);
  if (values.size() > 1) e.half_width = kZ95 * std::sqrt(sample_variance(values) / static_cast<double>(values.size()));
  return e;
}

Estimate delta_estimate(double value, std::span<const double> influence) {
  Estimate e;
  e.mean = value;
  e.n = static_cast<long long>(influence.size());
  if (influence.size() > 1) {
    e.half_width = kZ95 * std::sqrt(sample_variance(influence) / static_cast<double>(influence.size()));
  }
  return e;
}

Estimate variance_estimate(std::span<const double> values) {
  Estimate e;
  const auto n = static_cast<double>(values.size());
  e.n = static_cast<long long>(values.size());
  if (values.size() < 2) return e;
  const double mean = sample_mean(values);
  double m2 = 0.0;
  double m4 = 0.0;
  for (double v : values) {
    const double d = (v - mean) * (v - mean);
    m2 += d;
    m4 += d * d;
  }
  m2 /= n;
  m4 /= n;
  e.mean = m2 * n / (n - 1.0);
  const double var_of_var = std::max(m4 - m2 * m2, 0.0) / n;
  e.half_width = kZ95 * std::sqrt(var_of_var);
  return e;
}

double combine_half_widths(double a, double b) { return std::sqrt(a * a + b * b); }

double simultaneous_z(int family, double level) {
  if (family < 1) throw Error(ErrorCode::InvalidArgument, "family size must be positive");
  const double alpha = (1.0 - level) / static_cast<double>(family);
  boost::math::normal_distribution<double> normal;
  return boost::math::quantile(normal, 1.0 - alpha / 2.0);
}

double widen_for_family(double half_width_95, int family, double level) {
  return half_width_95 * simultaneous_z(family, level) / kZ95;
}

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(std::max(threads, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next.store(count);
          return;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace carnot
