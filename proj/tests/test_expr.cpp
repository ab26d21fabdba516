#include <gtest/gtest.h>

#include <cmath>

#include "carnot/expr.hpp"
#include "carnot/error.hpp"

using namespace carnot;

namespace {

double eval(const std::string& s, std::vector<double> y, int n = 2, int m = 1) {
  return parse_expr(s, n, m).evaluate(y);
}

ErrorCode parse_error(const std::string& s, std::string* location = nullptr) {
  try {
    parse_expr(s, 2, 1);
  } catch (const Error& e) {
    if (location) *location = e.location();
    return e.code();
  }
  ADD_FAILURE() << s << " parsed";
  return ErrorCode::Io;
}

}  // namespace

TEST(Expr, Precedence) {
  EXPECT_DOUBLE_EQ(eval("-x1^2", {3, 0, 0}), -9.0);
  EXPECT_DOUBLE_EQ(eval("1 + 2*x2 - z1/2", {0, 3, 4}), 5.0);
  EXPECT_DOUBLE_EQ(eval("x1^-2", {2, 0, 0}), 0.25);
  EXPECT_DOUBLE_EQ(eval("(x1 + 1)^3", {1, 0, 0}), 8.0);
  EXPECT_NEAR(eval("exp(x1)*sin(x2) + cos(z1) + log(2)", {1, 0.5, 0.25}),
              std::exp(1.0) * std::sin(0.5) + std::cos(0.25) + std::log(2.0), 1e-15);
  EXPECT_DOUBLE_EQ(eval("+x1 - -x2", {1, 2, 0}), 3.0);
  EXPECT_DOUBLE_EQ(eval("2.5e-1*x1", {4, 0, 0}), 1.0);
}

TEST(Expr, Errors) {
  std::string loc;
  EXPECT_EQ(parse_error("x3", &loc), ErrorCode::UnknownVariable);
  EXPECT_EQ(loc, "byte 0");
  EXPECT_EQ(parse_error("z2"), ErrorCode::UnknownVariable);
  EXPECT_EQ(parse_error("x1 +", &loc), ErrorCode::SyntaxError);
  EXPECT_EQ(loc, "byte 4");
  EXPECT_EQ(parse_error("foo(x1)"), ErrorCode::UnknownVariable);
  EXPECT_EQ(parse_error("(x1"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("x1^1.5"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error(""), ErrorCode::SyntaxError);
}

TEST(Expr, EvaluationDomainErrors) {
  try {
    eval("log(x1)", {-1, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LogOfNonPositive);
  }
  try {
    eval("1/x1", {0, 0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
}

TEST(Expr, PrintParsesBack) {
  const Expr e = parse_expr("x1^2*z1 - sin(x2)/(1 + x1^2)", 2, 1);
  const Expr back = parse_expr(to_string(e), 2, 1);
  const std::vector<double> y{0.3, -1.2, 0.7};
  EXPECT_DOUBLE_EQ(e.evaluate(y), back.evaluate(y));
  EXPECT_EQ(e.max_variable(), 2);
}
