#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "carnot/diffusion.hpp"

namespace carnot {

/// CC distance on the standard Heisenberg group, d(0, (x, y, z)).
/// Solves the geodesic equation by safeguarded Newton (tolerance 1e-12).
double heis_norm(double x, double y, double z);

/// d(p, q) = d(0, p^-1 q) on the standard Heisenberg group.
double heis_distance(const Point& p, const Point& q);

/// As above on a Heisenberg-type spec (n = 2, m = 1, any nonzero B_12).
/// Throws NotHeisenberg otherwise.
double heis_distance(const ValidatedSpec& spec, const Point& p, const Point& q);

/// Homogeneous quasi-norm (|x|^4 + |z|^2)^(1/4).
double homogeneous_norm(const Point& g);

/// c1 N(g) <= d(0, g) <= c2 N(g), certified from the bracket structure.
struct HomogeneousConstants {
  double c1 = 0.0;
  double c2 = 0.0;
};
HomogeneousConstants homogeneous_constants(const ValidatedSpec& spec);

struct DistanceResult {
  enum class Method { HeisenbergExact, HomogeneousBounds };
  double lower = 0.0;
  double upper = 0.0;
  Method method = Method::HomogeneousBounds;

  bool exact() const { return method == Method::HeisenbergExact; }
  double value() const { return upper; }
};

std::string_view to_string(DistanceResult::Method method);

DistanceResult homogeneous_bounds(const ValidatedSpec& spec, const HomogeneousConstants& c, const Point& p,
                                  const Point& q);
DistanceResult homogeneous_bounds(const ValidatedSpec& spec, const Point& p, const Point& q);

/// Exact on Heisenberg-type groups, homogeneous bounds elsewhere.
DistanceResult cc_distance(const ValidatedSpec& spec, const Point& p, const Point& q);

/// Squared distances d^2(x, y) for cfg.paths independent pairs from mu, as
/// (lower, upper) per pair. Both entries coincide on Heisenberg-type groups.
struct PairDistances {
  std::vector<double> lower_sq;
  std::vector<double> upper_sq;
  bool exact = false;
};
PairDistances sample_pair_distances(const OperatorContext& ctx, const SimConfig& cfg);

/// Double integral of d^2 against mu x mu; an interval estimate where the
/// distance is only bounded.
struct IntervalEstimate {
  Estimate lower;
  Estimate upper;
  bool exact = false;
  std::vector<std::string> warnings;
};
IntervalEstimate estimate_D2(const OperatorContext& ctx, const SimConfig& cfg);

/// Double integral of exp(c0 d^2). Uses the upper distance bound off
/// Heisenberg. Warns when the largest sample carries > 10% of the sum.
IntervalEstimate estimate_exp_integrability(const OperatorContext& ctx, double c0, const SimConfig& cfg);

/// Same estimator for precomputed squared distances, computed in log space.
/// Returns mean of exp(k d^2) with a heavy-tail warning flag.
struct ExpMoment {
  Estimate value;
  double log_mean = 0.0;
  double max_share = 0.0;  // largest term / sum
  bool heavy_tail = false;
};
ExpMoment exp_moment(const std::vector<double>& d_sq, double k);

}  // namespace carnot
