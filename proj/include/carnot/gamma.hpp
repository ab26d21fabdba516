#pragma once

#include <vector>

#include "carnot/constants.hpp"
#include "carnot/expr.hpp"
#include "carnot/jet.hpp"

namespace carnot {

/// The operator L_s = Delta_H - s E on a validated group.
struct OperatorContext {
  ValidatedSpec spec;
  double s = 1.0;
};

OperatorContext make_context(ValidatedSpec spec, double s);

// Jet-level calculus. Inputs are jets of f (and g) at a common center; each
// result is a jet of the derived function, exact to the available order.

/// Gamma(f, g) = sum_i (X_i f)(X_i g), one order below the inputs.
Jet gamma_jet(const OperatorContext& ctx, const Jet& f, const Jet& g);
/// Gamma^Z(f, g) = sum_k (Z_k f)(Z_k g).
Jet gammaZ_jet(const OperatorContext& ctx, const Jet& f, const Jet& g);
/// L f = sum_i X_i X_i f - s E f, two orders below the input.
Jet apply_L_jet(const OperatorContext& ctx, const Jet& f);
/// Gamma2(f) from a jet of order >= 3.
double gamma2_jet(const OperatorContext& ctx, const Jet& f);
/// Gamma2^Z(f) from a jet of order >= 3.
double gamma2Z_jet(const OperatorContext& ctx, const Jet& f);

// Pointwise evaluation on expressions.

double gamma(const OperatorContext& ctx, const Expr& f, const Expr& g, const Point& p);
double gammaZ(const OperatorContext& ctx, const Expr& f, const Expr& g, const Point& p);
double apply_L(const OperatorContext& ctx, const Expr& f, const Point& p);
double gamma2(const OperatorContext& ctx, const Expr& f, const Point& p);
double gamma2Z(const OperatorContext& ctx, const Expr& f, const Point& p);

/// Gamma(f, Gamma^Z(f)) - Gamma^Z(f, Gamma(f)); vanishes on Carnot groups.
double check_A2(const OperatorContext& ctx, const Expr& f, const Point& p);
double check_A2_jet(const OperatorContext& ctx, const Jet& f);

/// Gamma2 + eps Gamma2^Z - (rho1 - kappa/eps) Gamma - (rho2 + rho3 eps) Gamma^Z.
/// Throws NonPositiveEpsilon.
double cd_slack(const OperatorContext& ctx, const Expr& f, const Point& p, double epsilon, const CDConstants& c);
double cd_slack_jet(const OperatorContext& ctx, const Jet& f, double epsilon, const CDConstants& c);

/// 1/2 (L(fg) - g Lf - f Lg) straight from the definition.
double carre_oracle(const OperatorContext& ctx, const Expr& f, const Expr& g, const Point& p);

/// Axis-aligned box in ambient coordinates.
struct Box {
  Vector lower;
  Vector upper;
};

struct LyapunovResult {
  double sup_gradient_ratio = 0.0;  // sup (Gamma(W) + Gamma^Z(W)) / W^2
  double sup_drift_ratio = 0.0;     // sup L W / W
  Point argmax_gradient;
  Point argmax_drift;
  long long points = 0;
};

/// Grid sweep of the Lyapunov ratios over `grid` points per axis.
/// Throws WBelowOne if W < 1 at a grid point.
LyapunovResult check_lyapunov(const OperatorContext& ctx, const Expr& W, const Box& box, int grid);

}  // namespace carnot
