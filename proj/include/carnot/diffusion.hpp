#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "carnot/estimate.hpp"
#include "carnot/expr.hpp"
#include "carnot/gamma.hpp"
#include "carnot/rng.hpp"

namespace carnot {

/// Monte Carlo budget and seeding. The drift s lives in OperatorContext.
struct SimConfig {
  std::uint64_t seed = 1;
  int paths = 10000;
  int steps_per_unit_time = 256;
  int inner_paths = 1000;  // nested estimators only
  int threads = 1;
};

/// Throws InvalidArgument unless paths >= 1, inner_paths >= 1 and
/// steps_per_unit_time >= 16.
void validate(const SimConfig& cfg);

/// Same budget on an independent stream keyed by (label, index).
SimConfig derive(const SimConfig& cfg, std::string_view label, std::uint64_t index = 0);

struct PathEnsemble {
  std::vector<Point> endpoints;
  SimConfig config;
  double time = 0.0;
};

/// ceil(t * steps_per_unit_time), at least one step for t > 0 and none at t = 0.
int step_count(double t, int steps_per_unit_time);

/// One Euler path of horizontal Brownian motion from the origin with generator
/// Delta_H: dx = sqrt(2 dt) N, z_k += 1/2 <B^k x, dx>.
Point heat_point(const ValidatedSpec& spec, double t, int steps, Xoshiro256& rng);

/// One Euler-Maruyama path of the L_s diffusion from x.
Point sde_point(const OperatorContext& ctx, const Point& x, double t, int steps, Xoshiro256& rng);

/// Time change of the Mehler formula: Q_t f(x) = E f(delta_c x . g), g ~ p_a.
struct MehlerParams {
  double a = 0.0;
  double c = 1.0;
};
MehlerParams mehler_params(double s, double t);

/// delta_c x . g
Point mehler_map(const ValidatedSpec& spec, const MehlerParams& mp, const Point& x, const Point& g);

/// Throws NegativeTime.
PathEnsemble sample_heat(const ValidatedSpec& spec, double t, const SimConfig& cfg);
/// Heat samples at time 1/(2s). Throws NonPositiveDrift.
PathEnsemble sample_invariant(const OperatorContext& ctx, const SimConfig& cfg);
PathEnsemble sample_sde(const OperatorContext& ctx, const Point& x, double t, const SimConfig& cfg);

using PointFn = std::function<double(const Point&)>;
using RandomPointFn = std::function<double(const Point&, Xoshiro256&)>;

/// Per-path values g(y) with y ~ Q_t(x, .) drawn by the Mehler formula.
std::vector<double> mehler_values(const OperatorContext& ctx, const Point& x, double t, const SimConfig& cfg,
                                  const PointFn& g);

Estimate mehler_qt(const OperatorContext& ctx, const Expr& f, double t, const Point& x, const SimConfig& cfg);
Estimate sde_qt(const OperatorContext& ctx, const Expr& f, double t, const Point& x, const SimConfig& cfg);

/// Integral of g against the invariant measure.
Estimate estimate_mu_integral(const OperatorContext& ctx, const SimConfig& cfg, const PointFn& g);
/// As above for a randomized integrand; each path gets its own generator.
Estimate estimate_mu_integral_rng(const OperatorContext& ctx, const SimConfig& cfg, const RandomPointFn& g);

struct DecayPoint {
  double t = 0.0;
  Estimate value;
  /// Inner-noise correction that was subtracted from the plug-in value.
  double bias_correction = 0.0;
};

/// Var_mu(Q_t f) by nested Monte Carlo: cfg.paths outer points from mu,
/// cfg.inner_paths Mehler samples each. Throws InvalidArgument unless times
/// are increasing and NegativeTime for t < 0.
std::vector<DecayPoint> estimate_variance_decay(const OperatorContext& ctx, const Expr& f,
                                                const std::vector<double>& times, const SimConfig& cfg);

/// Ent_mu(Q_t f) by nested Monte Carlo with the plug-in bias correction
/// v / (2 n m) per outer point. Throws NonPositiveFunction if f <= 0 at a
/// sampled point.
std::vector<DecayPoint> estimate_entropy_decay(const OperatorContext& ctx, const Expr& f,
                                               const std::vector<double>& times, const SimConfig& cfg);

/// Evaluates an expression at a point without allocating.
double eval_at(const Expr& f, const Point& p);

}  // namespace carnot
