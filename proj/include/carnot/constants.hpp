#pragma once

#include "carnot/group.hpp"

namespace carnot {

/// Coefficients of the generalized curvature-dimension inequality
///   Gamma2 + eps Gamma2^Z >= (rho1 - kappa/eps) Gamma + (rho2 + rho3 eps) Gamma^Z.
struct CDConstants {
  double rho1 = 1.0;
  double rho2 = 0.5;
  double rho3 = 2.0;
  double kappa = 1.0;
};

/// A choice of eps together with the rate and prefactor it yields.
struct RatePlan {
  double epsilon = 0.0;
  double lambda = 0.0;
  double prefactor = 0.0;
  /// ln C - 2 lambda t at the time the plan was optimized for.
  double log_bound = 0.0;
};

/// Largest eigenvalue of M_{ii'} = sum_{j,k} gamma_ij^k gamma_i'j^k.
double kappa(const ValidatedSpec& spec);
/// A quarter of the smallest eigenvalue of N_{kl} = sum_{i,j} gamma_ij^k gamma_ij^l.
double rho2(const ValidatedSpec& spec);

Matrix kappa_matrix(const ValidatedSpec& spec);
Matrix rho2_matrix(const ValidatedSpec& spec);

/// Constants of L = Delta_H - s E: rho1 = s and rho3 = 2s come from
/// [X_i, sE] = s X_i and [Z_k, sE] = 2s Z_k; kappa and rho2 from the brackets.
CDConstants carnot_constants(const ValidatedSpec& spec, double s = 1.0);

/// min(rho1 - kappa/eps, rho2/eps + rho3). Throws NonPositiveEpsilon.
double lambda_eps(const CDConstants& c, double epsilon);

/// e (1 + 2 lambda eps / rho2)(1 + 2 kappa / rho2). Throws RateNotPositive
/// when lambda_eps <= 0.
double prefactor_C(const CDConstants& c, double epsilon);

/// Minimizes ln C(eps) - 2 lambda_eps t over eps in (kappa/rho1, inf) by a
/// logarithmic grid scan refined with golden-section search. Throws
/// NoPositiveRate when rho1 <= 0.
RatePlan optimal_eps_for_time(const CDConstants& c, double t);

/// Plan at a fixed eps.
RatePlan rate_plan(const CDConstants& c, double epsilon, double t = 0.0);

}  // namespace carnot
