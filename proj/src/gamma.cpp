#include "carnot/gamma.hpp"

#include <cmath>
#include <limits>

#include "carnot/error.hpp"

namespace carnot {

OperatorContext make_context(ValidatedSpec spec, double s) {
  if (!(s >= 0.0)) throw Error(ErrorCode::NonPositiveDrift, "drift strength s must be >= 0");
  return OperatorContext{std::move(spec), s};
}

Jet gamma_jet(const OperatorContext& ctx, const Jet& f, const Jet& g) {
  const int q = std::min(f.order(), g.order()) - 1;
  if (q < 0) throw Error(ErrorCode::OrderExhausted, "Gamma needs jets of order >= 1");
  Jet out(f.center(), q);
  for (int i = 0; i < ctx.spec.n(); ++i) {
    out += vf_apply(ctx.spec, FieldId::X(i), f) * vf_apply(ctx.spec, FieldId::X(i), g);
  }
  return out;
}

Jet gammaZ_jet(const OperatorContext& ctx, const Jet& f, const Jet& g) {
  const int q = std::min(f.order(), g.order()) - 1;
  if (q < 0) throw Error(ErrorCode::OrderExhausted, "Gamma^Z needs jets of order >= 1");
  Jet out(f.center(), q);
  for (int k = 0; k < ctx.spec.m(); ++k) {
    out += vf_apply(ctx.spec, FieldId::Z(k), f) * vf_apply(ctx.spec, FieldId::Z(k), g);
  }
  return out;
}

Jet apply_L_jet(const OperatorContext& ctx, const Jet& f) {
  if (f.order() < 2) throw Error(ErrorCode::OrderExhausted, "L needs a jet of order >= 2");
  Jet out(f.center(), f.order() - 2);
  for (int i = 0; i < ctx.spec.n(); ++i) {
    out += vf_apply(ctx.spec, FieldId::X(i), vf_apply(ctx.spec, FieldId::X(i), f));
  }
  if (ctx.s != 0.0) out -= vf_apply(ctx.spec, FieldId::E(), f) * ctx.s;
  return out;
}

double gamma2_jet(const OperatorContext& ctx, const Jet& f) {
  if (f.order() < 3) throw Error(ErrorCode::OrderExhausted, "Gamma2 needs a jet of order >= 3");
  const Jet gf = gamma_jet(ctx, f, f);
  const Jet lf = apply_L_jet(ctx, f);
  return 0.5 * apply_L_jet(ctx, gf).value() - gamma_jet(ctx, f, lf).value();
}

double gamma2Z_jet(const OperatorContext& ctx, const Jet& f) {
  if (f.order() < 3) throw Error(ErrorCode::OrderExhausted, "Gamma2^Z needs a jet of order >= 3");
  const Jet gzf = gammaZ_jet(ctx, f, f);
  const Jet lf = apply_L_jet(ctx, f);
  return 0.5 * apply_L_jet(ctx, gzf).value() - gammaZ_jet(ctx, f, lf).value();
}

double gamma(const OperatorContext& ctx, const Expr& f, const Expr& g, const Point& p) {
  return gamma_jet(ctx, eval_jet(f, p, 1), eval_jet(g, p, 1)).value();
}

double gammaZ(const OperatorContext& ctx, const Expr& f, const Expr& g, const Point& p) {
  return gammaZ_jet(ctx, eval_jet(f, p, 1), eval_jet(g, p, 1)).value();
}

double apply_L(const OperatorContext& ctx, const Expr& f, const Point& p) {
  return apply_L_jet(ctx, eval_jet(f, p, 2)).value();
}

double gamma2(const OperatorContext& ctx, const Expr& f, const Point& p) {
  return gamma2_jet(ctx, eval_jet(f, p, 3));
}

double gamma2Z(const OperatorContext& ctx, const Expr& f, const Point& p) {
  return gamma2Z_jet(ctx, eval_jet(f, p, 3));
}

double check_A2_jet(const OperatorContext& ctx, const Jet& f) {
  const Jet gz = gammaZ_jet(ctx, f, f);
  const Jet g = gamma_jet(ctx, f, f);
  return gamma_jet(ctx, f, gz).value() - gammaZ_jet(ctx, f, g).value();
}

double check_A2(const OperatorContext& ctx, const Expr& f, const Point& p) {
  return check_A2_jet(ctx, eval_jet(f, p, 2));
}

double cd_slack_jet(const OperatorContext& ctx, const Jet& f, double epsilon, const CDConstants& c) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::NonPositiveEpsilon, "epsilon must be positive");
  const double g = gamma_jet(ctx, f, f).value();
  const double gz = gammaZ_jet(ctx, f, f).value();
  return gamma2_jet(ctx, f) + epsilon * gamma2Z_jet(ctx, f) - (c.rho1 - c.kappa / epsilon) * g -
         (c.rho2 + c.rho3 * epsilon) * gz;
}

double cd_slack(const OperatorContext& ctx, const Expr& f, const Point& p, double epsilon, const CDConstants& c) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::NonPositiveEpsilon, "epsilon must be positive");
  return cd_slack_jet(ctx, eval_jet(f, p, 3), epsilon, c);
}

double carre_oracle(const OperatorContext& ctx, const Expr& f, const Expr& g, const Point& p) {
  const Jet jf = eval_jet(f, p, 2);
  const Jet jg = eval_jet(g, p, 2);
  const double lfg = apply_L_jet(ctx, jf * jg).value();
  return 0.5 * (lfg - jg.value() * apply_L_jet(ctx, jf).value() - jf.value() * apply_L_jet(ctx, jg).value());
}

LyapunovResult check_lyapunov(const OperatorContext& ctx, const Expr& W, const Box& box, int grid) {
  const int dim = ctx.spec.dim();
  if (box.lower.size() != dim || box.upper.size() != dim) {
    throw Error(ErrorCode::InvalidArgument, "box dimension does not match the group");
  }
  if (grid < 1) throw Error(ErrorCode::InvalidArgument, "grid resolution must be positive");
  LyapunovResult out;
  out.sup_gradient_ratio = -std::numeric_limits<double>::infinity();
  out.sup_drift_ratio = -std::numeric_limits<double>::infinity();
  std::vector<int> counter(static_cast<std::size_t>(dim), 0);
  Vector y(dim);
  for (;;) {
    for (int v = 0; v < dim; ++v) {
      const double frac = grid == 1 ? 0.5 : static_cast<double>(counter[static_cast<std::size_t>(v)]) / (grid - 1);
      y(v) = box.lower(v) + frac * (box.upper(v) - box.lower(v));
    }
    const Point p = Point::from_ambient(y, ctx.spec.n());
    const Jet w = eval_jet(W, p, 2);
    const double wv = w.value();
    if (wv < 1.0) throw Error(ErrorCode::WBelowOne, "W = " + std::to_string(wv) + " < 1 on the region");
    const double r1 = (gamma_jet(ctx, w, w).value() + gammaZ_jet(ctx, w, w).value()) / (wv * wv);
    const double r2 = apply_L_jet(ctx, w).value() / wv;
    if (r1 > out.sup_gradient_ratio) {
      out.sup_gradient_ratio = r1;
      out.argmax_gradient = p;
    }
    if (r2 > out.sup_drift_ratio) {
      out.sup_drift_ratio = r2;
      out.argmax_drift = p;
    }
    ++out.points;
    int v = 0;
    while (v < dim && ++counter[static_cast<std::size_t>(v)] == grid) counter[static_cast<std::size_t>(v++)] = 0;
    if (v == dim) break;
  }
  return out;
}

}  // namespace carnot
