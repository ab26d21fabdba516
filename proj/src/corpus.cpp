#include "carnot/corpus.hpp"

#include <cmath>
#include <random>

#include "carnot/rng.hpp"

namespace carnot {

namespace {

void monomials(int vars, int var, int remaining, std::vector<int>& current, std::vector<std::vector<int>>& out) {
  if (var == vars) {
    out.push_back(current);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    current[static_cast<std::size_t>(var)] = e;
    monomials(vars, var + 1, remaining - e, current, out);
  }
  current[static_cast<std::size_t>(var)] = 0;
}

Expr variable_expr(int v, int n) { return v < n ? Expr::x(v) : Expr::z(v - n, n); }

}  // namespace

template <typename Rng>
Expr random_polynomial(int n, int m, int degree, double range, Rng& rng) {
  std::uniform_real_distribution<double> coef(-range, range);
  std::vector<std::vector<int>> terms;
  std::vector<int> current(static_cast<std::size_t>(n + m), 0);
  monomials(n + m, 0, degree, current, terms);
  Expr sum = Expr::constant(coef(rng));
  for (const auto& alpha : terms) {
    bool constant_term = true;
    Expr term = Expr::constant(coef(rng));
    for (int v = 0; v < n + m; ++v) {
      const int e = alpha[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      constant_term = false;
      term = term * (e == 1 ? variable_expr(v, n) : pow(variable_expr(v, n), e));
    }
    if (!constant_term) sum = sum + term;
  }
  return sum;
}

template Expr random_polynomial<Xoshiro256>(int, int, int, double, Xoshiro256&);

std::vector<CorpusSample> make_corpus(const ValidatedSpec& spec, const CorpusConfig& cfg) {
  const int n = spec.n();
  const int m = spec.m();
  const int dim = n + m;
  std::vector<CorpusSample> out;
  out.reserve(static_cast<std::size_t>(cfg.samples));
  const std::uint64_t stream = stream_id("corpus");
  for (int id = 0; id < cfg.samples; ++id) {
    Xoshiro256 rng = stream_rng(cfg.seed, stream, static_cast<std::uint64_t>(id));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> box(-cfg.box, cfg.box);
    CorpusSample s;
    s.id = id;
    if (unit(rng) < cfg.bump_fraction) {
      // A * exp(-sum_v w_v (y_v - c_v)^2) plus a low-degree polynomial.
      std::uniform_real_distribution<double> amp(-cfg.coefficient_range, cfg.coefficient_range);
      std::uniform_real_distribution<double> width(0.1, 1.0);
      std::uniform_real_distribution<double> centre(-2.0, 2.0);
      Expr q = Expr::constant(0.0);
      for (int v = 0; v < dim; ++v) {
        const double w = width(rng);
        const double c = centre(rng);
        q = q + Expr::constant(w) * pow(variable_expr(v, n) - Expr::constant(c), 2);
      }
      const double a = amp(rng);
      s.f = Expr::constant(a) * exp(-q) + random_polynomial(n, m, 2, cfg.coefficient_range, rng);
    } else {
      s.f = random_polynomial(n, m, cfg.degree, cfg.coefficient_range, rng);
    }
    Vector y(dim);
    for (int v = 0; v < dim; ++v) y(v) = box(rng);
    s.p = Point::from_ambient(y, n);
    s.epsilon = cfg.eps_min * std::pow(cfg.eps_max / cfg.eps_min, unit(rng));
    out.push_back(std::move(s));
  }
  return out;
}

SlackSweep sweep_cd_slack(const OperatorContext& ctx, const std::vector<CorpusSample>& corpus, const CDConstants& c,
                          double tolerance) {
  SlackSweep sweep;
  sweep.samples.reserve(corpus.size());
  sweep.min_slack = std::numeric_limits<double>::infinity();
  for (const CorpusSample& s : corpus) {
    const double slack = cd_slack(ctx, s.f, s.p, s.epsilon, c);
    sweep.samples.push_back({s.id, s.epsilon, slack});
    if (slack < sweep.min_slack) {
      sweep.min_slack = slack;
      sweep.worst = s.id;
    }
    if (slack < -tolerance) ++sweep.violations;
  }
  return sweep;
}

}  // namespace carnot
