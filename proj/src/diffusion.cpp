#include "carnot/diffusion.hpp"

#include <cmath>
#include <random>

namespace carnot {

namespace {

// Central part of every sampler: Euler steps of horizontal Brownian motion
// started at (x, z), with optional OU drift -s E.
void euler_path(const ValidatedSpec& spec, double s, double t, int steps, Xoshiro256& rng, Vector& x, Vector& z) {
  if (steps <= 0) return;
  const int n = spec.n();
  const int m = spec.m();
  const double dt = t / steps;
  const double sd = std::sqrt(2.0 * dt);
  std::normal_distribution<double> normal;
  Vector dx(n);
  for (int step = 0; step < steps; ++step) {
    for (int i = 0; i < n; ++i) dx(i) = sd * normal(rng);
    for (int k = 0; k < m; ++k) {
      const Matrix& B = spec.B(k);
      double area = 0.0;
      for (int j = 0; j < n; ++j) {
        double row = 0.0;
        for (int i = 0; i < n; ++i) row += B(i, j) * dx(j) * x(i);
        area += row;
      }
      z(k) += 0.5 * area - 2.0 * s * z(k) * dt;
    }
    x += dx - s * dt * x;
  }
}

void check_time(double t) {
  if (!(t >= 0.0)) throw Error(ErrorCode::NegativeTime, "time must be non-negative");
}

}  // namespace

void validate(const SimConfig& cfg) {
  if (cfg.paths < 1) throw Error(ErrorCode::InvalidArgument, "paths must be >= 1", "paths");
  if (cfg.inner_paths < 1) throw Error(ErrorCode::InvalidArgument, "inner_paths must be >= 1", "inner_paths");
  if (cfg.steps_per_unit_time < 16) {
    throw Error(ErrorCode::InvalidArgument, "steps_per_unit_time must be >= 16", "steps_per_unit_time");
  }
}

SimConfig derive(const SimConfig& cfg, std::string_view label, std::uint64_t index) {
  SimConfig out = cfg;
  out.seed = splitmix64(cfg.seed ^ splitmix64(stream_id(label) ^ splitmix64(index)));
  return out;
}

int step_count(double t, int steps_per_unit_time) {
  if (t <= 0.0) return 0;
  return std::max(1, static_cast<int>(std::ceil(t * steps_per_unit_time - 1e-9)));
}

Point heat_point(const ValidatedSpec& spec, double t, int steps, Xoshiro256& rng) {
  Point p = Point::origin(spec.n(), spec.m());
  euler_path(spec, 0.0, t, steps, rng, p.x, p.z);
  return p;
}

Point sde_point(const OperatorContext& ctx, const Point& x, double t, int steps, Xoshiro256& rng) {
  Point p = x;
  euler_path(ctx.spec, ctx.s, t, steps, rng, p.x, p.z);
  return p;
}

MehlerParams mehler_params(double s, double t) {
  check_time(t);
  if (s == 0.0) return {t, 1.0};
  return {-std::expm1(-2.0 * s * t) / (2.0 * s), std::exp(-s * t)};
}

Point mehler_map(const ValidatedSpec& spec, const MehlerParams& mp, const Point& x, const Point& g) {
  Point scaled{mp.c * x.x, mp.c * mp.c * x.z};
  return group_mul(spec, scaled, g);
}

PathEnsemble sample_heat(const ValidatedSpec& spec, double t, const SimConfig& cfg) {
  check_time(t);
  validate(cfg);
  PathEnsemble out;
  out.config = cfg;
  out.time = t;
  out.endpoints.resize(static_cast<std::size_t>(cfg.paths));
  const int steps = step_count(t, cfg.steps_per_unit_time);
  const std::uint64_t stream = stream_id("heat");
  parallel_for(out.endpoints.size(), cfg.threads, [&](std::size_t i) {
    auto rng = stream_rng(cfg.seed, stream, i);
    out.endpoints[i] = heat_point(spec, t, steps, rng);
  });
  return out;
}

PathEnsemble sample_invariant(const OperatorContext& ctx, const SimConfig& cfg) {
  if (!(ctx.s > 0.0)) throw Error(ErrorCode::NonPositiveDrift, "invariant measure needs s > 0");
  return sample_heat(ctx.spec, 1.0 / (2.0 * ctx.s), cfg);
}

PathEnsemble sample_sde(const OperatorContext& ctx, const Point& x, double t, const SimConfig& cfg) {
  check_time(t);
  validate(cfg);
  PathEnsemble out;
  out.config = cfg;
  out.time = t;
  out.endpoints.resize(static_cast<std::size_t>(cfg.paths));
  const int steps = step_count(t, cfg.steps_per_unit_time);
  const std::uint64_t stream = stream_id("sde");
  parallel_for(out.endpoints.size(), cfg.threads, [&](std::size_t i) {
    auto rng = stream_rng(cfg.seed, stream, i);
    out.endpoints[i] = sde_point(ctx, x, t, steps, rng);
  });
  return out;
}

double eval_at(const Expr& f, const Point& p) {
  thread_local std::vector<double> buffer;
  buffer.resize(static_cast<std::size_t>(p.x.size() + p.z.size()));
  for (Eigen::Index i = 0; i < p.x.size(); ++i) buffer[static_cast<std::size_t>(i)] = p.x(i);
  for (Eigen::Index k = 0; k < p.z.size(); ++k) buffer[static_cast<std::size_t>(p.x.size() + k)] = p.z(k);
  return f.evaluate(buffer);
}

std::vector<double> mehler_values(const OperatorContext& ctx, const Point& x, double t, const SimConfig& cfg,
                                  const PointFn& g) {
  validate(cfg);
  const MehlerParams mp = mehler_params(ctx.s, t);
  std::vector<double> values(static_cast<std::size_t>(cfg.paths));
  if (t == 0.0) {
    const double v = g(x);
    std::fill(values.begin(), values.end(), v);
    return values;
  }
  const int steps = step_count(mp.a, cfg.steps_per_unit_time);
  const std::uint64_t stream = stream_id("heat");
  parallel_for(values.size(), cfg.threads, [&](std::size_t i) {
    auto rng = stream_rng(cfg.seed, stream, i);
    const Point h = heat_point(ctx.spec, mp.a, steps, rng);
    values[i] = g(mehler_map(ctx.spec, mp, x, h));
  });
  return values;
}

Estimate mehler_qt(const OperatorContext& ctx, const Expr& f, double t, const Point& x, const SimConfig& cfg) {
  const auto values = mehler_values(ctx, x, t, cfg, [&](const Point& y) { return eval_at(f, y); });
  Estimate e = mean_estimate(values);
  if (t == 0.0) e.half_width = 0.0;
  return e;
}

Estimate sde_qt(const OperatorContext& ctx, const Expr& f, double t, const Point& x, const SimConfig& cfg) {
  check_time(t);
  validate(cfg);
  std::vector<double> values(static_cast<std::size_t>(cfg.paths));
  const int steps = step_count(t, cfg.steps_per_unit_time);
  const std::uint64_t stream = stream_id("sde");
  parallel_for(values.size(), cfg.threads, [&](std::size_t i) {
    auto rng = stream_rng(cfg.seed, stream, i);
    values[i] = eval_at(f, sde_point(ctx, x, t, steps, rng));
  });
  return mean_estimate(values);
}

Estimate estimate_mu_integral(const OperatorContext& ctx, const SimConfig& cfg, const PointFn& g) {
  const PathEnsemble mu = sample_invariant(ctx, cfg);
  std::vector<double> values(mu.endpoints.size());
  parallel_for(values.size(), cfg.threads, [&](std::size_t i) { values[i] = g(mu.endpoints[i]); });
  return mean_estimate(values);
}

Estimate estimate_mu_integral_rng(const OperatorContext& ctx, const SimConfig& cfg, const RandomPointFn& g) {
  const PathEnsemble mu = sample_invariant(ctx, cfg);
  std::vector<double> values(mu.endpoints.size());
  const std::uint64_t stream = stream_id("integrand");
  parallel_for(values.size(), cfg.threads, [&](std::size_t i) {
    auto rng = stream_rng(cfg.seed, stream, i);
    values[i] = g(mu.endpoints[i], rng);
  });
  return mean_estimate(values);
}

namespace {

struct InnerMoments {
  std::vector<double> mean;      // [time][outer]
  std::vector<double> variance;  // [time][outer], sample variance of the inner draws
};

InnerMoments nested_moments(const OperatorContext& ctx, const Expr& f, const std::vector<double>& times,
                            const SimConfig& cfg, bool require_positive) {
  validate(cfg);
  for (std::size_t j = 0; j < times.size(); ++j) {
    check_time(times[j]);
    if (j > 0 && !(times[j] > times[j - 1])) {
      throw Error(ErrorCode::InvalidArgument, "times must be strictly increasing", "times/" + std::to_string(j));
    }
  }
  const PathEnsemble outer = sample_invariant(ctx, derive(cfg, "outer"));
  const std::size_t n_out = outer.endpoints.size();
  const int n_in = cfg.inner_paths;
  InnerMoments out;
  out.mean.assign(times.size() * n_out, 0.0);
  out.variance.assign(times.size() * n_out, 0.0);
  const std::uint64_t stream = stream_id("inner");

  parallel_for(n_out, cfg.threads, [&](std::size_t i) {
    const Point& y = outer.endpoints[i];
    std::vector<double> draws(static_cast<std::size_t>(n_in));
    for (std::size_t j = 0; j < times.size(); ++j) {
      const double t = times[j];
      if (t == 0.0) {
        const double v = eval_at(f, y);
        if (require_positive && !(v > 0.0)) {
          throw Error(ErrorCode::NonPositiveFunction, "f must be positive on the sampled support");
        }
        out.mean[j * n_out + i] = v;
        continue;
      }
      const MehlerParams mp = mehler_params(ctx.s, t);
      const int steps = step_count(mp.a, cfg.steps_per_unit_time);
      const std::uint64_t seed = splitmix64(cfg.seed ^ splitmix64(i));
      for (int r = 0; r < n_in; ++r) {
        auto rng = stream_rng(seed, stream, static_cast<std::uint64_t>(r));
        const Point h = heat_point(ctx.spec, mp.a, steps, rng);
        const double v = eval_at(f, mehler_map(ctx.spec, mp, y, h));
        if (require_positive && !(v > 0.0)) {
          throw Error(ErrorCode::NonPositiveFunction, "f must be positive on the sampled support");
        }
        draws[static_cast<std::size_t>(r)] = v;
      }
      out.mean[j * n_out + i] = sample_mean(draws);
      out.variance[j * n_out + i] = sample_variance(draws);
    }
  });
  return out;
}

}  // namespace

std::vector<DecayPoint> estimate_variance_decay(const OperatorContext& ctx, const Expr& f,
                                                const std::vector<double>& times, const SimConfig& cfg) {
  const InnerMoments mom = nested_moments(ctx, f, times, cfg, false);
  const std::size_t n_out = static_cast<std::size_t>(cfg.paths);
  const double n_in = cfg.inner_paths;
  std::vector<DecayPoint> out;
  for (std::size_t j = 0; j < times.size(); ++j) {
    std::span<const double> m(mom.mean.data() + j * n_out, n_out);
    std::span<const double> v(mom.variance.data() + j * n_out, n_out);
    const double mbar = sample_mean(m);
    const double correction = sample_mean(v) / n_in;
    std::vector<double> influence(n_out);
    for (std::size_t i = 0; i < n_out; ++i) influence[i] = (m[i] - mbar) * (m[i] - mbar) - v[i] / n_in;
    DecayPoint p;
    p.t = times[j];
    p.bias_correction = correction;
    p.value = delta_estimate(sample_variance(m) - correction, influence);
    out.push_back(p);
  }
  return out;
}

std::vector<DecayPoint> estimate_entropy_decay(const OperatorContext& ctx, const Expr& f,
                                               const std::vector<double>& times, const SimConfig& cfg) {
  const InnerMoments mom = nested_moments(ctx, f, times, cfg, true);
  const std::size_t n_out = static_cast<std::size_t>(cfg.paths);
  const double n_in = cfg.inner_paths;
  std::vector<DecayPoint> out;
  for (std::size_t j = 0; j < times.size(); ++j) {
    std::span<const double> m(mom.mean.data() + j * n_out, n_out);
    std::span<const double> v(mom.variance.data() + j * n_out, n_out);
    const double mbar = sample_mean(m);
    std::vector<double> phi(n_out);
    double correction = 0.0;
    for (std::size_t i = 0; i < n_out; ++i) {
      const double c = v[i] / (2.0 * n_in * m[i]);
      phi[i] = m[i] * std::log(m[i]) - c;
      correction += c;
    }
    correction /= static_cast<double>(n_out);
    const double value = sample_mean(phi) - mbar * std::log(mbar);
    std::vector<double> influence(n_out);
    for (std::size_t i = 0; i < n_out; ++i) influence[i] = phi[i] - (std::log(mbar) + 1.0) * m[i];
    DecayPoint p;
    p.t = times[j];
    p.bias_correction = correction;
    p.value = delta_estimate(value, influence);
    out.push_back(p);
  }
  return out;
}

}  // namespace carnot
