#pragma once

#include <string>
#include <vector>

#include "carnot/diffusion.hpp"
#include "carnot/distance.hpp"
#include "carnot/report.hpp"

namespace carnot {

/// Everything a check needs besides its own parameters.
struct CheckSetup {
  OperatorContext ctx;
  CDConstants consts;
  SimConfig cfg;
  /// Step of the central differences used for gradients of Q_t f.
  double fd_step = 1e-3;
};

/// Gamma(f)(p) and Gamma^Z(f)(p) from a first-order jet.
struct GradientSquares {
  double horizontal = 0.0;
  double vertical = 0.0;
};
GradientSquares gradient_squares(const ValidatedSpec& spec, const Expr& f, const Point& p);

/// u exp(-(u/r)^8): the identity on |u| << r, decaying beyond r.
Expr soft_clip(const Expr& u, double r = 6.0);

/// Q_t(f^2) - (Q_t f)^2 <= (1 - e^{-2 lambda t}) / lambda * Q_t(Gamma f + eps Gamma^Z f) at x.
CheckReport check_poincare(const CheckSetup& setup, const Expr& f, double t, const Point& x, double eps);
/// The t -> infinity form against mu.
CheckReport check_poincare_mu(const CheckSetup& setup, const Expr& f, double eps);

/// Local log-Sobolev inequality for f > 0 at x.
CheckReport check_logsob(const CheckSetup& setup, const Expr& f, double t, const Point& x, double eps);
CheckReport check_logsob_mu(const CheckSetup& setup, const Expr& f, double eps);

/// Gamma(Q_t f) + rho2 t Gamma^Z(Q_t f) <= (1 + 2 kappa / rho2) / (2t) (Q_t f^2 - (Q_t f)^2) at x.
CheckReport check_reverse_poincare(const CheckSetup& setup, const Expr& f, double t, const Point& x);

/// Q_t f Gamma(ln Q_t f) + rho2 t Q_t f Gamma^Z(ln Q_t f)
///   <= (1 + 2 kappa / rho2) / t (Q_t(f ln f) - Q_t f ln Q_t f) at x, f >= delta > 0.
CheckReport check_reverse_logsob(const CheckSetup& setup, const Expr& f, double t, const Point& x);

/// Gamma(Q_t f) + eps Gamma^Z(Q_t f) <= e^{-2 lambda t} Q_t(Gamma f + eps Gamma^Z f) at x.
CheckReport estimate_gradient_decay(const CheckSetup& setup, const Expr& f, double t, const Point& x, double eps);

/// (Q_t f)^alpha(x) <= Q_t(f^alpha)(y) exp(alpha / (alpha - 1) (1 + 2 kappa / rho2) / (4t) d^2(x, y)), f >= 0.
/// Off Heisenberg the upper distance bound is used.
CheckReport check_wang_harnack(const CheckSetup& setup, const Expr& f, double alpha, double t, const Point& x,
                               const Point& y);

/// Q_t(ln f)(x) <= ln Q_t f(y) + (1 + 2 kappa / rho2) / (4t) d^2(x, y), inf f > 0.
CheckReport check_log_harnack(const CheckSetup& setup, const Expr& f, double t, const Point& x, const Point& y);

/// N_t = double integral of exp(beta / (alpha - 1) C d^2 / t), C = 1 + 2 kappa / rho2.
struct NtEstimate {
  double t = 0.0;
  Estimate value;
  double log_value = 0.0;
  double max_share = 0.0;
  bool heavy_tail = false;
  bool exact_distance = false;
};
/// Estimates over a grid of times on one set of pairs (common random numbers).
std::vector<NtEstimate> estimate_Nt(const CheckSetup& setup, double alpha, double beta,
                                    const std::vector<double>& times);

/// ||Q_t f||_beta <= N_t^{1/beta} ||f||_alpha under mu.
CheckReport check_hyperbound(const CheckSetup& setup, const Expr& f, double alpha, double beta, double t);

/// Decay curve paired with its bounds.
struct DecayCheck {
  std::vector<DecayPoint> curve;  // includes t = 0
  std::vector<CheckReport> reports;
  Estimate fitted_exponent;       // -slope of ln value against t over t > 0
  double rate = 0.0;              // 2 lambda_eps
};

/// Var_mu(Q_t f) against C e^{-2 lambda t} Var_mu(f) and against
/// e^{-2 lambda t} / lambda * mu(Gamma f + eps Gamma^Z f); monotonicity of the curve.
DecayCheck check_L2_decay(const CheckSetup& setup, const Expr& f, const std::vector<double>& times, double eps);

/// Ent_mu(Q_t f) against C e^{-2 lambda t} Ent_mu(f); monotonicity of the curve.
DecayCheck check_entropy_decay(const CheckSetup& setup, const Expr& f, const std::vector<double>& times,
                               double eps);

/// Weighted least-squares decay exponent of a positive curve.
Estimate fit_decay_exponent(const std::vector<DecayPoint>& curve);

}  // namespace carnot
