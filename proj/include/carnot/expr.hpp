#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace carnot {

/// Immutable expression tree for smooth test functions on R^n x R^m.
///
/// Grammar (whitespace ignored):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' | '/') unary)*
///     unary   := '-' unary | power
///     power   := primary ('^' '-'? integer)?
///     primary := number | variable | func '(' expr ')' | '(' expr ')'
///     func    := 'exp' | 'log' | 'sin' | 'cos'
///     variable:= 'x' index | 'z' index          (1-based)
///
/// '^' binds tighter than unary minus, so -x1^2 is -(x1^2).
class Expr {
 public:
  enum class Op { Constant, Variable, Add, Sub, Mul, Div, Neg, Pow, Exp, Log, Sin, Cos };

  Expr();  // the constant 0

  static Expr constant(double value);
  /// Ambient variable `index` (x's first, then z's) displayed as `name`.
  static Expr variable(int index, std::string name);
  static Expr x(int i);          // x_{i+1}, ambient index i
  static Expr z(int k, int n);   // z_{k+1}, ambient index n + k

  Op op() const;
  double value() const;          // Constant
  int variable_index() const;    // Variable
  const std::string& name() const;
  int exponent() const;          // Pow
  std::size_t arity() const;
  const Expr& arg(std::size_t i) const;

  /// Largest ambient variable index used, or -1 for closed expressions.
  int max_variable() const;

  /// Point evaluation at ambient coordinates. Throws LogOfNonPositive or
  /// DivisionByZero where the expression is undefined.
  double evaluate(std::span<const double> y) const;

  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a);

 private:
  struct Node;
  explicit Expr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;

  static Expr make(Op op, std::vector<Expr> args, double value = 0.0, int exponent = 0);

  friend Expr pow(const Expr& base, int exponent);
  friend Expr exp(const Expr& a);
  friend Expr log(const Expr& a);
  friend Expr sin(const Expr& a);
  friend Expr cos(const Expr& a);
};

Expr pow(const Expr& base, int exponent);
Expr exp(const Expr& a);
Expr log(const Expr& a);
Expr sin(const Expr& a);
Expr cos(const Expr& a);

/// Parses `text` for a group with n horizontal and m vertical coordinates.
/// Throws SyntaxError or UnknownVariable with the byte offset as location.
Expr parse_expr(std::string_view text, int n, int m);

std::string to_string(const Expr& e);

}  // namespace carnot
