#include "carnot/constants.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "carnot/error.hpp"
#include "carnot/jacobi.hpp"

namespace carnot {

Matrix kappa_matrix(const ValidatedSpec& spec) {
  Matrix M = Matrix::Zero(spec.n(), spec.n());
  for (int k = 0; k < spec.m(); ++k) M += spec.B(k) * spec.B(k).transpose();
  return M;
}

Matrix rho2_matrix(const ValidatedSpec& spec) {
  Matrix N(spec.m(), spec.m());
  for (int k = 0; k < spec.m(); ++k)
    for (int l = 0; l < spec.m(); ++l) N(k, l) = spec.B(k).cwiseProduct(spec.B(l)).sum();
  return N;
}

double kappa(const ValidatedSpec& spec) {
  const auto eig = jacobi_eigen(kappa_matrix(spec));
  return eig.values(eig.values.size() - 1);
}

double rho2(const ValidatedSpec& spec) { return 0.25 * jacobi_eigen(rho2_matrix(spec)).values(0); }

CDConstants carnot_constants(const ValidatedSpec& spec, double s) {
  if (!(s > 0.0)) throw Error(ErrorCode::NonPositiveDrift, "drift strength must be positive for CD constants");
  return CDConstants{s, rho2(spec), 2.0 * s, kappa(spec)};
}

double lambda_eps(const CDConstants& c, double epsilon) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::NonPositiveEpsilon, "epsilon must be positive");
  return std::min(c.rho1 - c.kappa / epsilon, c.rho2 / epsilon + c.rho3);
}

double prefactor_C(const CDConstants& c, double epsilon) {
  const double lambda = lambda_eps(c, epsilon);
  if (!(lambda > 0.0)) {
    throw Error(ErrorCode::RateNotPositive, "lambda_eps = " + std::to_string(lambda) + " at eps = " + std::to_string(epsilon));
  }
  return std::numbers::e * (1.0 + 2.0 * lambda * epsilon / c.rho2) * (1.0 + 2.0 * c.kappa / c.rho2);
}

RatePlan rate_plan(const CDConstants& c, double epsilon, double t) {
  RatePlan plan;
  plan.epsilon = epsilon;
  plan.lambda = lambda_eps(c, epsilon);
  plan.prefactor = prefactor_C(c, epsilon);
  plan.log_bound = std::log(plan.prefactor) - 2.0 * plan.lambda * t;
  return plan;
}

RatePlan optimal_eps_for_time(const CDConstants& c, double t) {
  if (!(c.rho1 > 0.0)) throw Error(ErrorCode::NoPositiveRate, "rho1 <= 0: no epsilon gives a positive rate");
  if (t < 0.0) throw Error(ErrorCode::NegativeTime, "time must be non-negative");

  // Work in u = ln(eps - eps_min) so the open lower end maps to -inf.
  const double eps_min = c.kappa / c.rho1;
  const double ref = std::max(eps_min, 1.0);
  const auto eps_of = [&](double u) { return eps_min + ref * std::exp(u); };
  const auto objective = [&](double u) {
    const double eps = eps_of(u);
    const double lambda = lambda_eps(c, eps);
    if (!(lambda > 0.0)) return std::numeric_limits<double>::infinity();
    return std::log(std::numbers::e * (1.0 + 2.0 * lambda * eps / c.rho2) * (1.0 + 2.0 * c.kappa / c.rho2)) -
           2.0 * lambda * t;
  };

  constexpr double kLo = -30.0;
  constexpr double kHi = 14.0;
  constexpr int kGrid = 441;
  int best = 0;
  double best_val = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kGrid; ++i) {
    const double u = kLo + (kHi - kLo) * i / (kGrid - 1);
    const double v = objective(u);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double step = (kHi - kLo) / (kGrid - 1);
  double a = kLo + step * std::max(best - 1, 0);
  double b = kLo + step * std::min(best + 1, kGrid - 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = objective(x1);
  double f2 = objective(x2);
  for (int it = 0; it < 200 && (b - a) > 1e-12; ++it) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = objective(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = objective(x2);
    }
  }
  double u = f1 < f2 ? x1 : x2;
  if (std::min(f1, f2) > best_val) u = kLo + step * best;
  return rate_plan(c, eps_of(u), t);
}

}  // namespace carnot
