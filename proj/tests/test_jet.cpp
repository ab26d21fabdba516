#include <gtest/gtest.h>

#include <cmath>

#include "carnot/jet.hpp"
#include "support.hpp"

using namespace carnot;
using carnot::testing::heis;

TEST(Jet, PartialsOfKnownFunction) {
  // f = x1^2 x2 + exp(z1) at (1, 2, 0).
  const Expr f = parse_expr("x1^2*x2 + exp(z1)", 2, 1);
  const Jet j = eval_jet(f, Point(Vector::LinSpaced(2, 1, 2), Vector::Zero(1)), 3);
  EXPECT_DOUBLE_EQ(j.value(), 3.0);
  EXPECT_DOUBLE_EQ(j.partial({0}), 4.0);
  EXPECT_DOUBLE_EQ(j.partial({1}), 1.0);
  EXPECT_DOUBLE_EQ(j.partial({0, 0}), 4.0);
  EXPECT_DOUBLE_EQ(j.partial({0, 1}), 2.0);
  EXPECT_DOUBLE_EQ(j.partial({0, 0, 1}), 2.0);
  EXPECT_DOUBLE_EQ(j.partial({2, 2, 2}), 1.0);
}

TEST(Jet, MatchesFiniteDifferences) {
  const Expr f = parse_expr("sin(x1*z1)/(2 + cos(x2)) + log(3 + x1^2) - x2^-1", 2, 1);
  const Point p(Vector::LinSpaced(2, 0.4, -0.9), Vector::Constant(1, 1.3));
  const Vector g = eval_jet(f, p, 1).gradient();
  EXPECT_LT((g - numeric_grad(f, p, 1e-5)).norm(), 1e-8);
}

TEST(Jet, OrderLimits) {
  const Expr f = parse_expr("x1", 2, 1);
  const Point p = Point::origin(2, 1);
  EXPECT_THROW(eval_jet(f, p, kMaxJetOrder + 1), Error);
  try {
    vf_apply(heis(), FieldId::X(0), eval_jet(f, p, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OrderExhausted);
  }
}

TEST(Jet, HeisenbergBrackets) {
  const ValidatedSpec s = heis();
  const Expr f = parse_expr("x1^3*z1 + sin(x2*z1) + x1*x2^2", 2, 1);
  const Point p(Vector::LinSpaced(2, 0.7, -0.2), Vector::Constant(1, 0.5));
  const Jet j = eval_jet(f, p, 3);
  const double zf = vf_apply(s, FieldId::Z(0), j).value();
  EXPECT_NEAR(bracket(s, FieldId::X(0), FieldId::X(1), j).value(), zf, 1e-12);
  EXPECT_NEAR(bracket(s, FieldId::X(0), FieldId::Z(0), j).value(), 0.0, 1e-12);
  EXPECT_NEAR(bracket(s, FieldId::Z(0), FieldId::E(), j).value(), 2.0 * zf, 1e-12);
  EXPECT_NEAR(bracket(s, FieldId::X(1), FieldId::E(), j).value(), vf_apply(s, FieldId::X(1), j).value(), 1e-12);
}
