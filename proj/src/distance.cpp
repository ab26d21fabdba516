#include "carnot/distance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "carnot/constants.hpp"

namespace carnot {

namespace {

// 2 psi - sin(2 psi), with a series near zero to avoid cancellation.
double chord_area(double psi) {
  const double u = 2.0 * psi;
  if (u < 0.2) {
    const double u2 = u * u;
    return u * u2 / 6.0 * (1.0 - u2 / 20.0 * (1.0 - u2 / 42.0 * (1.0 - u2 / 72.0 * (1.0 - u2 / 110.0))));
  }
  return u - std::sin(u);
}

// h(psi) = (2 psi - sin 2psi) / sin^2 psi is increasing from 0 to infinity on (0, pi).
double h_value(double psi) {
  const double s = std::sin(psi);
  return chord_area(psi) / (s * s);
}

double h_slope(double psi) {
  const double s = std::sin(psi);
  return 4.0 - 2.0 * std::cos(psi) * chord_area(psi) / (s * s * s);
}

double solve_psi(double q) {
  double lo = 0.0;
  double hi = std::numbers::pi;
  // h ~ 4 psi / 3 near 0 and h ~ 2 pi / (pi - psi)^2 near pi.
  double psi = q < 2.0 ? 0.75 * q : std::numbers::pi - std::sqrt(2.0 * std::numbers::pi / q);
  psi = std::clamp(psi, 1e-300, std::numbers::pi * (1.0 - 1e-16));
  for (int iter = 0; iter < 200; ++iter) {
    const double r = h_value(psi) - q;
    if (r > 0.0) {
      hi = psi;
    } else {
      lo = psi;
    }
    const double slope = h_slope(psi);
    double next = psi - r / slope;
    if (!(next > lo && next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
    if (std::abs(next - psi) <= 1e-15 * std::max(psi, 1e-300) || hi - lo <= 1e-16 * hi) return next;
    psi = next;
  }
  throw Error(ErrorCode::NewtonNoConvergence, "geodesic parameter did not converge");
}

Point relative(const ValidatedSpec* spec, const Point& p, const Point& q) {
  if (spec != nullptr) return group_mul(*spec, group_inv(*spec, p), q);
  Point r{q.x - p.x, q.z - p.z};
  r.z(0) += 0.5 * (-p.x(0) * q.x(1) + p.x(1) * q.x(0));
  return r;
}

void require_heisenberg_point(const Point& p) {
  if (p.x.size() != 2 || p.z.size() != 1) throw Error(ErrorCode::NotHeisenberg, "points must lie in R^2 x R^1");
}

}  // namespace

double heis_norm(double x, double y, double z) {
  const double r2 = x * x + y * y;
  const double a = std::abs(z);
  if (a == 0.0) return std::sqrt(r2);
  if (r2 == 0.0) return std::sqrt(4.0 * std::numbers::pi * a);
  const double psi = solve_psi(8.0 * a / r2);
  if (psi < 0.5 * std::numbers::pi) return std::sqrt(r2) * psi / std::sin(psi);
  return std::sqrt(8.0 * a * psi * psi / chord_area(psi));
}

double heis_distance(const Point& p, const Point& q) {
  require_heisenberg_point(p);
  require_heisenberg_point(q);
  const Point g = relative(nullptr, p, q);
  return heis_norm(g.x(0), g.x(1), g.z(0));
}

double heis_distance(const ValidatedSpec& spec, const Point& p, const Point& q) {
  if (!is_heisenberg_type(spec)) throw Error(ErrorCode::NotHeisenberg, "spec is not of Heisenberg type");
  const Point g = relative(&spec, p, q);
  return heis_norm(g.x(0), g.x(1), g.z(0) / spec.B(0)(0, 1));
}

double homogeneous_norm(const Point& g) {
  const double x2 = g.x.squaredNorm();
  return std::pow(x2 * x2 + g.z.squaredNorm(), 0.25);
}

HomogeneousConstants homogeneous_constants(const ValidatedSpec& spec) {
  // |z| <= sqrt(kappa) l^2 / 4 and |x| <= l along a horizontal curve of length l.
  const double k = kappa(spec);
  HomogeneousConstants c;
  c.c1 = std::pow(1.0 + k / 16.0, -0.25);
  // Pure vertical moves: one loop per selected bracket column, each enclosing
  // area |A_c| at cost sqrt(4 pi |A_c|), with A = G^-1 v.
  const Matrix& bm = spec.bracket_matrix();
  const int m = spec.m();
  Eigen::ColPivHouseholderQR<Matrix> qr(bm);
  Matrix G(m, m);
  for (int c_ = 0; c_ < m; ++c_) G.col(c_) = bm.col(qr.colsPermutation().indices()(c_));
  Eigen::JacobiSVD<Matrix> svd(G);
  const double smin = svd.singularValues()(m - 1);
  c.c2 = 1.0 + std::sqrt(4.0 * std::numbers::pi) * std::pow(static_cast<double>(m), 0.75) / std::sqrt(smin);
  return c;
}

std::string_view to_string(DistanceResult::Method method) {
  return method == DistanceResult::Method::HeisenbergExact ? "heisenberg-exact" : "homogeneous-bounds";
}

DistanceResult homogeneous_bounds(const ValidatedSpec& spec, const HomogeneousConstants& c, const Point& p,
                                  const Point& q) {
  const double nrm = homogeneous_norm(relative(&spec, p, q));
  return {c.c1 * nrm, c.c2 * nrm, DistanceResult::Method::HomogeneousBounds};
}

DistanceResult homogeneous_bounds(const ValidatedSpec& spec, const Point& p, const Point& q) {
  return homogeneous_bounds(spec, homogeneous_constants(spec), p, q);
}

DistanceResult cc_distance(const ValidatedSpec& spec, const Point& p, const Point& q) {
  if (is_heisenberg_type(spec)) {
    const double d = heis_distance(spec, p, q);
    return {d, d, DistanceResult::Method::HeisenbergExact};
  }
  return homogeneous_bounds(spec, p, q);
}

PairDistances sample_pair_distances(const OperatorContext& ctx, const SimConfig& cfg) {
  const PathEnsemble xs = sample_invariant(ctx, derive(cfg, "pair-x"));
  const PathEnsemble ys = sample_invariant(ctx, derive(cfg, "pair-y"));
  PairDistances out;
  out.exact = is_heisenberg_type(ctx.spec);
  out.lower_sq.resize(xs.endpoints.size());
  out.upper_sq.resize(xs.endpoints.size());
  const HomogeneousConstants c = out.exact ? HomogeneousConstants{} : homogeneous_constants(ctx.spec);
  parallel_for(xs.endpoints.size(), cfg.threads, [&](std::size_t i) {
    if (out.exact) {
      const double d = heis_distance(ctx.spec, xs.endpoints[i], ys.endpoints[i]);
      out.lower_sq[i] = out.upper_sq[i] = d * d;
    } else {
      const DistanceResult r = homogeneous_bounds(ctx.spec, c, xs.endpoints[i], ys.endpoints[i]);
      out.lower_sq[i] = r.lower * r.lower;
      out.upper_sq[i] = r.upper * r.upper;
    }
  });
  return out;
}

IntervalEstimate estimate_D2(const OperatorContext& ctx, const SimConfig& cfg) {
  const PairDistances pd = sample_pair_distances(ctx, cfg);
  IntervalEstimate out;
  out.exact = pd.exact;
  out.lower = mean_estimate(pd.lower_sq);
  out.upper = mean_estimate(pd.upper_sq);
  return out;
}

ExpMoment exp_moment(const std::vector<double>& d_sq, double k) {
  ExpMoment out;
  if (d_sq.empty()) return out;
  double lmax = -std::numeric_limits<double>::infinity();
  for (double d : d_sq) lmax = std::max(lmax, k * d);
  std::vector<double> scaled(d_sq.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < d_sq.size(); ++i) {
    scaled[i] = std::exp(k * d_sq[i] - lmax);
    sum += scaled[i];
  }
  const Estimate e = mean_estimate(scaled);
  out.log_mean = lmax + std::log(e.mean);
  out.max_share = 1.0 / sum;
  out.heavy_tail = out.max_share > 0.1;
  const double scale = std::exp(lmax);
  out.value = {e.mean * scale, e.half_width * scale, e.n};
  return out;
}

IntervalEstimate estimate_exp_integrability(const OperatorContext& ctx, double c0, const SimConfig& cfg) {
  if (!(c0 > 0.0)) throw Error(ErrorCode::InvalidArgument, "c0 must be positive", "c0");
  const PairDistances pd = sample_pair_distances(ctx, cfg);
  IntervalEstimate out;
  out.exact = pd.exact;
  const ExpMoment lo = exp_moment(pd.lower_sq, c0);
  const ExpMoment hi = exp_moment(pd.upper_sq, c0);
  out.lower = lo.value;
  out.upper = hi.value;
  if (hi.heavy_tail) {
    out.warnings.push_back("heavy tail: largest sample carries " + std::to_string(hi.max_share) + " of the sum");
  }
  return out;
}

}  // namespace carnot
