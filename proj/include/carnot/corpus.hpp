#pragma once

#include <cstdint>
#include <vector>

#include "carnot/expr.hpp"
#include "carnot/gamma.hpp"

namespace carnot {

/// Seeded family of smooth test functions with evaluation points and eps values.
struct CorpusConfig {
  std::uint64_t seed = 20240611;
  int samples = 10000;
  int degree = 4;               // total degree of the random polynomials
  double coefficient_range = 2.0;
  double box = 3.0;             // points uniform in [-box, box]^(n+m)
  double bump_fraction = 0.2;   // share of exp(-quadratic) bumps
  double eps_min = 0.1;         // eps log-uniform in [eps_min, eps_max]
  double eps_max = 10.0;
};

struct CorpusSample {
  int id = 0;
  Expr f;
  Point p;
  double epsilon = 1.0;
};

/// Dense random polynomial of total degree <= degree, coefficients uniform in
/// [-range, range].
template <typename Rng>
Expr random_polynomial(int n, int m, int degree, double range, Rng& rng);

std::vector<CorpusSample> make_corpus(const ValidatedSpec& spec, const CorpusConfig& cfg);

struct SlackSample {
  int id = 0;
  double epsilon = 0.0;
  double slack = 0.0;
};

struct SlackSweep {
  std::vector<SlackSample> samples;
  double min_slack = 0.0;
  int worst = -1;
  int violations = 0;  // slack < -tolerance
};

/// cd_slack over a corpus; the tolerance only feeds the violation count.
SlackSweep sweep_cd_slack(const OperatorContext& ctx, const std::vector<CorpusSample>& corpus, const CDConstants& c,
                          double tolerance = 1e-9);

}  // namespace carnot
