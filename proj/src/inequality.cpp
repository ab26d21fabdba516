#include "carnot/inequality.hpp"

#include <cmath>
#include <limits>

#include "carnot/jet.hpp"

namespace carnot {

namespace {

// A statistic together with its per-path influence values, so that smooth
// functions of sample means get delta-method intervals.
struct Lin {
  double value = 0.0;
  std::vector<double> infl;

  Estimate estimate() const { return delta_estimate(value, infl); }
};

Lin lin_mean(const std::vector<double>& v) {
  Lin out;
  out.value = sample_mean(v);
  out.infl.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.infl[i] = v[i] - out.value;
  return out;
}

// Unbiased variance of the per-path values.
Lin lin_variance(const std::vector<double>& v) {
  Lin out;
  const double m = sample_mean(v);
  out.value = sample_variance(v);
  out.infl.resize(v.size());
  double pop = 0.0;
  for (double x : v) pop += (x - m) * (x - m);
  pop /= static_cast<double>(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.infl[i] = (v[i] - m) * (v[i] - m) - pop;
  return out;
}

// Unbiased estimate of (E v)^2.
Lin lin_square_of_mean(const std::vector<double>& v) {
  Lin out;
  const double m = sample_mean(v);
  out.value = m * m - sample_variance(v) / static_cast<double>(v.size());
  out.infl.resize(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.infl[i] = 2.0 * m * (v[i] - m);
  return out;
}

Lin lin_axpy(const Lin& a, double w, const Lin& b) {
  Lin out = a;
  out.value += w * b.value;
  for (std::size_t i = 0; i < out.infl.size(); ++i) out.infl[i] += w * b.infl[i];
  return out;
}

Lin lin_apply(Lin a, double value, double slope) {
  a.value = value;
  for (double& x : a.infl) x *= slope;
  return a;
}

Lin lin_ratio(const Lin& a, const Lin& b) {
  Lin out;
  out.value = a.value / b.value;
  out.infl.resize(a.infl.size());
  for (std::size_t i = 0; i < a.infl.size(); ++i) {
    out.infl[i] = a.infl[i] / b.value - a.value * b.infl[i] / (b.value * b.value);
  }
  return out;
}

// Entropy of the per-path values, mean(f ln(f / mean f)). The empirical
// entropy is non-negative, so rounding below zero is clamped.
Lin lin_entropy(const std::vector<double>& f) {
  const double m = sample_mean(f);
  std::vector<double> terms(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) terms[i] = f[i] * std::log(f[i] / m);
  const double ent = sample_mean(terms);
  Lin out;
  out.value = std::max(0.0, ent);
  out.infl.resize(f.size());
  // Influence of mean(f ln f) - M ln M.
  for (std::size_t i = 0; i < f.size(); ++i) out.infl[i] = terms[i] - ent - (f[i] - m);
  return out;
}

double positive_lambda(const CDConstants& c, double eps) {
  const double lambda = lambda_eps(c, eps);
  if (!(lambda > 0.0)) {
    throw Error(ErrorCode::RateNotPositive, "lambda_eps <= 0: eps must exceed kappa / rho1", "eps");
  }
  return lambda;
}

void require_positive_time(double t) {
  if (!(t > 0.0)) throw Error(ErrorCode::NegativeTime, "t must be positive");
}

void require_positive(const std::vector<double>& v, bool strict) {
  for (double x : v) {
    if (strict ? !(x > 0.0) : !(x >= 0.0)) {
      throw Error(ErrorCode::NonPositiveFunction, strict ? "f must be positive" : "f must be non-negative");
    }
  }
}

// Heat increments shared by every evaluation point of one check.
struct Bundle {
  MehlerParams mp;
  std::vector<Point> g;
};

Bundle draw(const CheckSetup& setup, double t) {
  Bundle b;
  b.mp = mehler_params(setup.ctx.s, t);
  b.g = sample_heat(setup.ctx.spec, b.mp.a, setup.cfg).endpoints;
  return b;
}

std::vector<double> values_at(const CheckSetup& setup, const Bundle& b, const Point& x, const PointFn& fn) {
  std::vector<double> out(b.g.size());
  parallel_for(out.size(), setup.cfg.threads,
               [&](std::size_t i) { out[i] = fn(mehler_map(setup.ctx.spec, b.mp, x, b.g[i])); });
  return out;
}

std::vector<double> expr_values(const CheckSetup& setup, const Bundle& b, const Point& x, const Expr& f) {
  return values_at(setup, b, x, [&](const Point& y) { return eval_at(f, y); });
}

// Per-path central differences of y -> f(delta_c y . g) along X_i (right
// translation) and Z_k, at steps h and 2h, combined into
// Gamma(Q_t f) + w Gamma^Z(Q_t f).
struct GradientEstimate {
  Lin value;
  double stencil_error = 0.0;
};

GradientEstimate gradient_of_qt(const CheckSetup& setup, const Bundle& b, const Expr& f, const Point& x, double w) {
  const ValidatedSpec& spec = setup.ctx.spec;
  const double h = setup.fd_step;
  auto shifted = [&](FieldId field, double step) {
    Point d = Point::origin(spec.n(), spec.m());
    if (field.kind == FieldId::Kind::X) {
      d.x(field.index) = step;
      return group_mul(spec, x, d);
    }
    d.z(field.index) = step;
    return Point{x.x, x.z + d.z};
  };
  auto derivative = [&](FieldId field, double step) {
    const Point up = shifted(field, step);
    const Point down = shifted(field, -step);
    std::vector<double> out(b.g.size());
    parallel_for(out.size(), setup.cfg.threads, [&](std::size_t i) {
      const double fu = eval_at(f, mehler_map(spec, b.mp, up, b.g[i]));
      const double fd = eval_at(f, mehler_map(spec, b.mp, down, b.g[i]));
      out[i] = (fu - fd) / (2.0 * step);
    });
    return out;
  };

  GradientEstimate out;
  out.value.infl.assign(b.g.size(), 0.0);
  double coarse = 0.0;
  for (int i = 0; i < spec.n() + spec.m(); ++i) {
    const bool horizontal = i < spec.n();
    const FieldId field = horizontal ? FieldId::X(i) : FieldId::Z(i - spec.n());
    const double weight = horizontal ? 1.0 : w;
    if (weight == 0.0) continue;
    out.value = lin_axpy(out.value, weight, lin_square_of_mean(derivative(field, h)));
    const double m2 = sample_mean(derivative(field, 2.0 * h));
    coarse += weight * m2 * m2;
  }
  // Richardson estimate of the O(h^2) error plus a rounding allowance for the
  // cancellation in the differences.
  out.stencil_error = std::abs(out.value.value - coarse) / 3.0 + 1e-9 * std::abs(out.value.value);
  return out;
}

std::vector<double> gamma_values(const CheckSetup& setup, const Bundle& b, const Point& x, const Expr& f, double eps,
                                 bool divide_by_f) {
  return values_at(setup, b, x, [&](const Point& y) {
    const GradientSquares g = gradient_squares(setup.ctx.spec, f, y);
    const double v = g.horizontal + eps * g.vertical;
    return divide_by_f ? v / eval_at(f, y) : v;
  });
}

std::vector<double> gamma_values_mu(const CheckSetup& setup, const std::vector<Point>& pts, const Expr& f, double eps,
                                    bool divide_by_f) {
  std::vector<double> out(pts.size());
  parallel_for(out.size(), setup.cfg.threads, [&](std::size_t i) {
    const GradientSquares g = gradient_squares(setup.ctx.spec, f, pts[i]);
    const double v = g.horizontal + eps * g.vertical;
    out[i] = divide_by_f ? v / eval_at(f, pts[i]) : v;
  });
  return out;
}

Estimate scaled(Estimate e, double w) {
  e.mean *= w;
  e.half_width *= std::abs(w);
  return e;
}

void add_point(CheckReport& r, const char* prefix, const Point& p) {
  for (Eigen::Index i = 0; i < p.x.size(); ++i) r.parameters.emplace_back(std::string(prefix) + "x" + std::to_string(i + 1), p.x(i));
  for (Eigen::Index k = 0; k < p.z.size(); ++k) r.parameters.emplace_back(std::string(prefix) + "z" + std::to_string(k + 1), p.z(k));
}

CheckReport finish(std::string name, const Lin& lhs, Estimate rhs, double stencil = 0.0) {
  return make_report(std::move(name), lhs.estimate(), rhs, stencil);
}

double harnack_constant(const CDConstants& c) { return 1.0 + 2.0 * c.kappa / c.rho2; }

}  // namespace

GradientSquares gradient_squares(const ValidatedSpec& spec, const Expr& f, const Point& p) {
  const Vector grad = eval_jet(f, p, 1).gradient();
  const Frame frame = frame_at(spec, p);
  return {(frame.X * grad).squaredNorm(), (frame.Z * grad).squaredNorm()};
}

Expr soft_clip(const Expr& u, double r) { return u * exp(-pow(u / Expr::constant(r), 8)); }

CheckReport check_poincare(const CheckSetup& setup, const Expr& f, double t, const Point& x, double eps) {
  const double lambda = positive_lambda(setup.consts, eps);
  if (!(t >= 0.0)) throw Error(ErrorCode::NegativeTime, "t must be non-negative");
  const Bundle b = draw(setup, t);
  const Lin lhs = lin_variance(expr_values(setup, b, x, f));
  const double factor = -std::expm1(-2.0 * lambda * t) / lambda;
  const Estimate rhs = scaled(mean_estimate(gamma_values(setup, b, x, f, eps, false)), factor);
  CheckReport r = finish("poincare", lhs, rhs);
  r.parameters = {{"s", setup.ctx.s}, {"eps", eps}, {"t", t}, {"lambda", lambda}};
  add_point(r, "", x);
  return r;
}

CheckReport check_poincare_mu(const CheckSetup& setup, const Expr& f, double eps) {
  const double lambda = positive_lambda(setup.consts, eps);
  const PathEnsemble mu = sample_invariant(setup.ctx, setup.cfg);
  std::vector<double> fv(mu.endpoints.size());
  for (std::size_t i = 0; i < fv.size(); ++i) fv[i] = eval_at(f, mu.endpoints[i]);
  const Lin lhs = lin_variance(fv);
  const Estimate rhs = scaled(mean_estimate(gamma_values_mu(setup, mu.endpoints, f, eps, false)), 1.0 / lambda);
  CheckReport r = finish("poincare_mu", lhs, rhs);
  r.parameters = {{"s", setup.ctx.s}, {"eps", eps}, {"lambda", lambda}};
  return r;
}

CheckReport check_logsob(const CheckSetup& setup, const Expr& f, double t, const Point& x, double eps) {
  const double lambda = positive_lambda(setup.consts, eps);
  if (!(t >= 0.0)) throw Error(ErrorCode::NegativeTime, "t must be non-negative");
  const Bundle b = draw(setup, t);
  const auto fv = expr_values(setup, b, x, f);
  require_positive(fv, true);
  const Lin lhs = lin_entropy(fv);
  const double factor = -std::expm1(-2.0 * lambda * t) / (2.0 * lambda);
  const Estimate rhs = scaled(mean_estimate(gamma_values(setup, b, x, f, eps, true)), factor);
  CheckReport r = finish("logsob", lhs, rhs);
  r.parameters = {{"s", setup.ctx.s}, {"eps", eps}, {"t", t}, {"lambda", lambda}};
  add_point(r, "", x);
  return r;
}

CheckReport check_logsob_mu(const CheckSetup& setup, const Expr& f, double eps) {
  const double lambda = positive_lambda(setup.consts, eps);
  const PathEnsemble mu = sample_invariant(setup.ctx, setup.cfg);
  std::vector<double> fv(mu.endpoints.size());
  for (std::size_t i = 0; i < fv.size(); ++i) fv[i] = eval_at(f, mu.endpoints[i]);
  require_positive(fv, true);
  const Lin lhs = lin_entropy(fv);
  const Estimate rhs = scaled(mean_estimate(gamma_values_mu(setup, mu.endpoints, f, eps, true)), 0.5 / lambda);
  CheckReport r = finish("logsob_mu", lhs, rhs);
  r.parameters = {{"s", setup.ctx.s}, {"eps", eps}, {"lambda", lambda}};
  return r;
}

CheckReport check_reverse_poincare(const CheckSetup& setup, const Expr& f, double t, const Point& x) {
  require_positive_time(t);
  const CDConstants& c = setup.consts;
  const Bundle b = draw(setup, t);
  const GradientEstimate lhs = gradient_of_qt(setup, b, f, x, c.rho2 * t);
  const double factor = harnack_constant(c) / (2.0 * t);
  const Estimate rhs = scaled(lin_variance(expr_values(setup, b, x, f)).estimate(), factor);
  CheckReport r = finish("reverse_poincare", lhs.value, rhs, lhs.stencil_error);
  r.parameters = {{"s", setup.ctx.s}, {"t", t}, {"rho2", c.rho2}, {"kappa", c.kappa}};
  add_point(r, "", x);
  if (r.lhs.mean > 0.0) r.notes.push_back("rhs/lhs ratio " + std::to_string(r.rhs.mean / r.lhs.mean));
  return r;
}

CheckReport check_reverse_logsob(const CheckSetup& setup, const Expr& f, double t, const Point& x) {
  require_positive_time(t);
  const CDConstants& c = setup.consts;
  const Bundle b = draw(setup, t);
  const auto fv = expr_values(setup, b, x, f);
  require_positive(fv, true);
  const GradientEstimate grad = gradient_of_qt(setup, b, f, x, c.rho2 * t);
  const Lin qf = lin_mean(fv);
  // Q f Gamma(ln Q f) = Gamma(Q f) / Q f.
  const Lin lhs = lin_ratio(grad.value, qf);
  const double stencil = grad.stencil_error / qf.value;
  const double factor = harnack_constant(c) / t;
  const Estimate rhs = scaled(lin_entropy(fv).estimate(), factor);
  CheckReport r = finish("reverse_logsob", lhs, rhs, stencil);
  r.parameters = {{"s", setup.ctx.s}, {"t", t}, {"rho2", c.rho2}, {"kappa", c.kappa}};
  add_point(r, "", x);
  return r;
}

CheckReport estimate_gradient_decay(const CheckSetup& setup, const Expr& f, double t, const Point& x, double eps) {
  if (!(t >= 0.0)) throw Error(ErrorCode::NegativeTime, "t must be non-negative");
  const double lambda = lambda_eps(setup.consts, eps);
  const Bundle b = draw(setup, t);
  const GradientEstimate lhs = gradient_of_qt(setup, b, f, x, eps);
  const Estimate rhs = scaled(mean_estimate(gamma_values(setup, b, x, f, eps, false)), std::exp(-2.0 * lambda * t));
  CheckReport r = finish("gradient_decay", lhs.value, rhs, lhs.stencil_error);
  r.parameters = {{"s", setup.ctx.s}, {"eps", eps}, {"t", t}, {"lambda", lambda}};
  add_point(r, "", x);
  return r;
}

CheckReport check_wang_harnack(const CheckSetup& setup, const Expr& f, double alpha, double t, const Point& x,
                               const Point& y) {
  require_positive_time(t);
  if (!(alpha > 1.0)) throw Error(ErrorCode::InvalidArgument, "alpha must exceed 1", "alpha");
  const DistanceResult d = cc_distance(setup.ctx.spec, x, y);
  const Bundle b = draw(setup, t);
  const auto fx = expr_values(setup, b, x, f);
  const auto fy = expr_values(setup, b, y, f);
  require_positive(fx, false);
  require_positive(fy, false);
  const Lin mx = lin_mean(fx);
  const Lin lhs = lin_apply(mx, std::pow(mx.value, alpha), alpha * std::pow(mx.value, alpha - 1.0));
  std::vector<double> fy_alpha(fy.size());
  for (std::size_t i = 0; i < fy.size(); ++i) fy_alpha[i] = std::pow(fy[i], alpha);
  const double exponent = alpha / (alpha - 1.0) * harnack_constant(setup.consts) / (4.0 * t) * d.upper * d.upper;
  const Estimate rhs = scaled(mean_estimate(fy_alpha), std::exp(exponent));
  CheckReport r = finish("wang_harnack", lhs, rhs);
  r.parameters = {{"s", setup.ctx.s}, {"alpha", alpha}, {"t", t}, {"distance", d.upper}, {"exponent", exponent}};
  add_point(r, "", x);
  add_point(r, "y_", y);
  if (!d.exact()) r.notes.push_back("distance upper bound used; verdict is one-sided");
  return r;
}

CheckReport check_log_harnack(const CheckSetup& setup, const Expr& f, double t, const Point& x, const Point& y) {
  require_positive_time(t);
  const DistanceResult d = cc_distance(setup.ctx.spec, x, y);
  const Bundle b = draw(setup, t);
  const auto fx = expr_values(setup, b, x, f);
  const auto fy = expr_values(setup, b, y, f);
  require_positive(fx, true);
  require_positive(fy, true);
  std::vector<double> log_fx(fx.size());
  for (std::size_t i = 0; i < fx.size(); ++i) log_fx[i] = std::log(fx[i]);
  const Lin lhs = lin_mean(log_fx);
  const Lin my = lin_mean(fy);
  const double cost = harnack_constant(setup.consts) / (4.0 * t) * d.upper * d.upper;
  Estimate rhs = lin_apply(my, std::log(my.value), 1.0 / my.value).estimate();
  rhs.mean += cost;
  CheckReport r = finish("log_harnack", lhs, rhs);
  r.parameters = {{"s", setup.ctx.s}, {"t", t}, {"distance", d.upper}, {"cost", cost}};
  add_point(r, "", x);
  add_point(r, "y_", y);
  if (!d.exact()) r.notes.push_back("distance upper bound used; verdict is one-sided");
  return r;
}

std::vector<NtEstimate> estimate_Nt(const CheckSetup& setup, double alpha, double beta,
                                    const std::vector<double>& times) {
  if (!(alpha > 1.0) || !(beta > alpha)) {
    throw Error(ErrorCode::InvalidArgument, "need beta > alpha > 1", "alpha");
  }
  for (double t : times) require_positive_time(t);
  const PairDistances pd = sample_pair_distances(setup.ctx, derive(setup.cfg, "Nt"));
  const double C = harnack_constant(setup.consts);
  std::vector<NtEstimate> out;
  for (double t : times) {
    const ExpMoment em = exp_moment(pd.upper_sq, beta / (alpha - 1.0) * C / t);
    NtEstimate e;
    e.t = t;
    e.value = em.value;
    e.log_value = em.log_mean;
    e.max_share = em.max_share;
    e.heavy_tail = em.heavy_tail;
    e.exact_distance = pd.exact;
    out.push_back(e);
  }
  return out;
}

CheckReport check_hyperbound(const CheckSetup& setup, const Expr& f, double alpha, double beta, double t) {
  const NtEstimate nt = estimate_Nt(setup, alpha, beta, {t}).front();
  const SimConfig& cfg = setup.cfg;
  const PathEnsemble outer = sample_invariant(setup.ctx, derive(cfg, "outer"));
  const std::size_t n = outer.endpoints.size();
  std::vector<double> qf_beta(n);
  std::vector<double> f_alpha(n);
  parallel_for(n, cfg.threads, [&](std::size_t i) {
    SimConfig inner = derive(cfg, "inner", i);
    inner.paths = cfg.inner_paths;
    inner.threads = 1;
    const auto v = mehler_values(setup.ctx, outer.endpoints[i], t, inner, [&](const Point& y) { return eval_at(f, y); });
    qf_beta[i] = std::pow(std::abs(sample_mean(v)), beta);
    f_alpha[i] = std::pow(std::abs(eval_at(f, outer.endpoints[i])), alpha);
  });
  const Lin mb = lin_mean(qf_beta);
  const Lin lhs = lin_apply(mb, std::pow(mb.value, 1.0 / beta), std::pow(mb.value, 1.0 / beta - 1.0) / beta);
  const Lin ma = lin_mean(f_alpha);
  const Estimate norm_f =
      lin_apply(ma, std::pow(ma.value, 1.0 / alpha), std::pow(ma.value, 1.0 / alpha - 1.0) / alpha).estimate();
  const double nt_root = std::exp(nt.log_value / beta);
  const double nt_root_hw = nt.value.mean > 0.0 ? nt_root / beta * nt.value.half_width / nt.value.mean : 0.0;
  Estimate rhs;
  rhs.mean = nt_root * norm_f.mean;
  rhs.half_width = combine_half_widths(nt_root * norm_f.half_width, norm_f.mean * nt_root_hw);
  rhs.n = norm_f.n;
  CheckReport r = finish("hyperbound", lhs, rhs);
  r.parameters = {{"s", setup.ctx.s}, {"alpha", alpha}, {"beta", beta}, {"t", t}, {"log_Nt", nt.log_value}};
  r.notes.push_back("lhs uses the plug-in inner mean; its inner-noise bias is upward (conservative)");
  if (nt.heavy_tail) r.notes.push_back("N_t heavy tail: largest sample carries " + std::to_string(nt.max_share));
  return r;
}

Estimate fit_decay_exponent(const std::vector<DecayPoint>& curve) {
  std::vector<double> ts;
  std::vector<double> ys;
  std::vector<double> sds;
  for (const DecayPoint& p : curve) {
    if (p.t > 0.0 && p.value.mean > 0.0) {
      ts.push_back(p.t);
      ys.push_back(std::log(p.value.mean));
      sds.push_back(p.value.half_width / kZ95 / p.value.mean);
    }
  }
  Estimate out;
  out.n = static_cast<long long>(ts.size());
  if (ts.size() < 2) {
    out.mean = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  const double tbar = sample_mean(ts);
  double sxx = 0.0;
  for (double t : ts) sxx += (t - tbar) * (t - tbar);
  double slope = 0.0;
  double var = 0.0;
  for (std::size_t j = 0; j < ts.size(); ++j) {
    const double w = (ts[j] - tbar) / sxx;
    slope += w * ys[j];
    var += w * w * sds[j] * sds[j];
  }
  out.mean = -slope;
  out.half_width = kZ95 * std::sqrt(var);
  return out;
}

namespace {

std::vector<double> with_origin(const std::vector<double>& times) {
  std::vector<double> out;
  if (times.empty() || times.front() > 0.0) out.push_back(0.0);
  out.insert(out.end(), times.begin(), times.end());
  return out;
}

void add_monotone_reports(DecayCheck& out, const std::string& name, double eps) {
  for (std::size_t j = 1; j < out.curve.size(); ++j) {
    CheckReport r = make_report(name, out.curve[j].value, out.curve[j - 1].value);
    r.parameters = {{"eps", eps}, {"t", out.curve[j].t}, {"t_prev", out.curve[j - 1].t}};
    out.reports.push_back(std::move(r));
  }
}

}  // namespace

DecayCheck check_L2_decay(const CheckSetup& setup, const Expr& f, const std::vector<double>& times, double eps) {
  const double lambda = positive_lambda(setup.consts, eps);
  const double C = prefactor_C(setup.consts, eps);
  DecayCheck out;
  out.rate = 2.0 * lambda;
  out.curve = estimate_variance_decay(setup.ctx, f, with_origin(times), setup.cfg);
  const Estimate energy = estimate_mu_integral(setup.ctx, derive(setup.cfg, "gradient-integral"), [&](const Point& p) {
    const GradientSquares g = gradient_squares(setup.ctx.spec, f, p);
    return g.horizontal + eps * g.vertical;
  });
  const Estimate var0 = out.curve.front().value;
  for (std::size_t j = 1; j < out.curve.size(); ++j) {
    const DecayPoint& p = out.curve[j];
    const double decay = std::exp(-2.0 * lambda * p.t);
    CheckReport r = make_report("L2_decay", p.value, scaled(var0, C * decay));
    r.parameters = {{"s", setup.ctx.s}, {"eps", eps}, {"t", p.t}, {"lambda", lambda}, {"C", C}};
    if (p.t < 0.5 / lambda) r.notes.push_back("t below 1/(2 lambda): outside the guaranteed range");
    out.reports.push_back(std::move(r));
    CheckReport g = make_report("variance_gradient_bound", p.value, scaled(energy, decay / lambda));
    g.parameters = {{"s", setup.ctx.s}, {"eps", eps}, {"t", p.t}, {"lambda", lambda}};
    out.reports.push_back(std::move(g));
  }
  add_monotone_reports(out, "variance_monotone", eps);
  out.fitted_exponent = fit_decay_exponent(out.curve);
  return out;
}

DecayCheck check_entropy_decay(const CheckSetup& setup, const Expr& f, const std::vector<double>& times,
                               double eps) {
  const double lambda = positive_lambda(setup.consts, eps);
  const double C = prefactor_C(setup.consts, eps);
  DecayCheck out;
  out.rate = 2.0 * lambda;
  out.curve = estimate_entropy_decay(setup.ctx, f, with_origin(times), setup.cfg);
  const Estimate ent0 = out.curve.front().value;
  for (std::size_t j = 1; j < out.curve.size(); ++j) {
    const DecayPoint& p = out.curve[j];
    CheckReport r = make_report("entropy_decay", p.value, scaled(ent0, C * std::exp(-2.0 * lambda * p.t)));
    r.parameters = {{"s", setup.ctx.s}, {"eps", eps}, {"t", p.t}, {"lambda", lambda}, {"C", C}};
    r.notes.push_back("inner plug-in bias correction " + std::to_string(p.bias_correction));
    if (p.t < 0.5 / lambda) r.notes.push_back("t below 1/(2 lambda): outside the guaranteed range");
    out.reports.push_back(std::move(r));
  }
  add_monotone_reports(out, "entropy_monotone", eps);
  out.fitted_exponent = fit_decay_exponent(out.curve);
  return out;
}

}  // namespace carnot
