#include <gtest/gtest.h>

#include <cmath>

#include "carnot/corpus.hpp"
#include "support.hpp"

using namespace carnot;
using carnot::testing::heis;

TEST(Gamma, OperatorOnCoordinates) {
  const OperatorContext ctx = make_context(heis(), 1.0);
  const Point p(Vector::LinSpaced(2, 0.3, -1.1), Vector::Constant(1, 0.8));
  EXPECT_NEAR(apply_L(ctx, parse_expr("z1", 2, 1), p), -2.0 * 0.8, 1e-14);
  EXPECT_NEAR(apply_L(ctx, parse_expr("x1", 2, 1), p), -0.3, 1e-14);
  // Delta_H (x1^2 + x2^2) = 4, E(x1^2 + x2^2) = 2 |x|^2.
  EXPECT_NEAR(apply_L(ctx, parse_expr("x1^2 + x2^2", 2, 1), p), 4.0 - 2.0 * (0.09 + 1.21), 1e-13);
  EXPECT_NEAR(gamma(ctx, parse_expr("z1", 2, 1), parse_expr("z1", 2, 1), p), 0.25 * (0.09 + 1.21), 1e-14);
  EXPECT_NEAR(gammaZ(ctx, parse_expr("z1", 2, 1), parse_expr("z1", 2, 1), p), 1.0, 1e-14);
}

TEST(Gamma, IdentitiesOverCorpus) {
  const ValidatedSpec s = heis();
  const OperatorContext ou = make_context(s, 1.0);
  const OperatorContext flat = make_context(s, 0.0);
  CorpusConfig cfg;
  cfg.samples = 300;
  for (const CorpusSample& c : make_corpus(s, cfg)) {
    const double g = gamma(ou, c.f, c.f, c.p);
    const double scale = 1.0 + std::abs(g) + std::abs(gammaZ(ou, c.f, c.f, c.p));
    EXPECT_NEAR(g, carre_oracle(ou, c.f, c.f, c.p), 1e-10 * scale) << c.id;
    EXPECT_NEAR(gamma2(ou, c.f, c.p), gamma2(flat, c.f, c.p) + g, 1e-9 * (1.0 + std::abs(gamma2(ou, c.f, c.p))))
        << c.id;
    const Jet j = eval_jet(c.f, c.p, 3);
    const Jet zf = vf_apply(s, FieldId::Z(0), j);
    const double expect = gamma_jet(ou, zf, zf).value() + 2.0 * zf.value() * zf.value();
    EXPECT_NEAR(gamma2Z(ou, c.f, c.p), expect, 1e-9 * (1.0 + std::abs(expect))) << c.id;
    EXPECT_NEAR(check_A2(ou, c.f, c.p), 0.0, 1e-9 * scale * scale) << c.id;
  }
}

TEST(Gamma, CurvatureDimensionSlack) {
  const ValidatedSpec s = heis();
  const OperatorContext ctx = make_context(s, 1.0);
  CorpusConfig cfg;
  cfg.samples = 500;
  const auto corpus = make_corpus(s, cfg);
  const SlackSweep ok = sweep_cd_slack(ctx, corpus, carnot_constants(s, 1.0));
  EXPECT_EQ(ok.violations, 0);
  EXPECT_GE(ok.min_slack, -1e-9);
  CDConstants inflated = carnot_constants(s, 1.0);
  inflated.rho1 = 10.0;
  EXPECT_GT(sweep_cd_slack(ctx, corpus, inflated).violations, 0);
  EXPECT_THROW(cd_slack(ctx, corpus[0].f, corpus[0].p, 0.0, inflated), Error);
}

TEST(Gamma, CorpusIsDeterministic) {
  CorpusConfig cfg;
  cfg.samples = 20;
  const auto a = make_corpus(heis(), cfg);
  const auto b = make_corpus(heis(), cfg);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(to_string(a[i].f), to_string(b[i].f));
    EXPECT_EQ(a[i].p.ambient(), b[i].p.ambient());
    EXPECT_EQ(a[i].epsilon, b[i].epsilon);
  }
}

TEST(Gamma, Lyapunov) {
  const OperatorContext ctx = make_context(heis(), 1.0);
  const Box box{Vector::Constant(3, -2.0), Vector::Constant(3, 2.0)};
  const LyapunovResult r = check_lyapunov(ctx, parse_expr("1 + x1^2 + x2^2 + z1^2", 2, 1), box, 9);
  EXPECT_EQ(r.points, 9 * 9 * 9);
  EXPECT_GT(r.sup_gradient_ratio, 0.0);
  EXPECT_THROW(check_lyapunov(ctx, parse_expr("x1", 2, 1), box, 5), Error);
}
