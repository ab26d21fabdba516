#include "carnot/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <sstream>

#include "carnot/error.hpp"

namespace carnot {

struct Expr::Node {
  Op op = Op::Constant;
  double value = 0.0;
  int index = -1;
  int exponent = 0;
  std::string name;
  std::vector<Expr> args;
  int max_var = -1;
};

Expr::Expr() : Expr(constant(0.0)) {}

Expr::Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Expr Expr::make(Op op, std::vector<Expr> args, double value, int exponent) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->value = value;
  node->exponent = exponent;
  for (const Expr& a : args) node->max_var = std::max(node->max_var, a.max_variable());
  node->args = std::move(args);
  return Expr(std::move(node));
}

Expr Expr::constant(double value) {
  auto node = std::make_shared<Node>();
  node->op = Op::Constant;
  node->value = value;
  return Expr(std::move(node));
}

Expr Expr::variable(int index, std::string name) {
  auto node = std::make_shared<Node>();
  node->op = Op::Variable;
  node->index = index;
  node->max_var = index;
  node->name = std::move(name);
  return Expr(std::move(node));
}

Expr Expr::x(int i) { return variable(i, "x" + std::to_string(i + 1)); }
Expr Expr::z(int k, int n) { return variable(n + k, "z" + std::to_string(k + 1)); }

Expr::Op Expr::op() const { return node_->op; }
double Expr::value() const { return node_->value; }
int Expr::variable_index() const { return node_->index; }
const std::string& Expr::name() const { return node_->name; }
int Expr::exponent() const { return node_->exponent; }
std::size_t Expr::arity() const { return node_->args.size(); }
const Expr& Expr::arg(std::size_t i) const { return node_->args[i]; }
int Expr::max_variable() const { return node_->max_var; }

double Expr::evaluate(std::span<const double> y) const {
  const Node& n = *node_;
  switch (n.op) {
    case Op::Constant: return n.value;
    case Op::Variable: return y[static_cast<std::size_t>(n.index)];
    case Op::Add: return n.args[0].evaluate(y) + n.args[1].evaluate(y);
    case Op::Sub: return n.args[0].evaluate(y) - n.args[1].evaluate(y);
    case Op::Mul: return n.args[0].evaluate(y) * n.args[1].evaluate(y);
    case Op::Div: {
      const double d = n.args[1].evaluate(y);
      if (d == 0.0) throw Error(ErrorCode::DivisionByZero, "division by zero in " + to_string(*this));
      return n.args[0].evaluate(y) / d;
    }
    case Op::Neg: return -n.args[0].evaluate(y);
    case Op::Pow: {
      const double b = n.args[0].evaluate(y);
      if (n.exponent < 0 && b == 0.0) {
        throw Error(ErrorCode::DivisionByZero, "negative power of zero in " + to_string(*this));
      }
      return std::pow(b, n.exponent);
    }
    case Op::Exp: return std::exp(n.args[0].evaluate(y));
    case Op::Log: {
      const double a = n.args[0].evaluate(y);
      if (!(a > 0.0)) throw Error(ErrorCode::LogOfNonPositive, "log argument " + std::to_string(a) + " is not positive");
      return std::log(a);
    }
    case Op::Sin: return std::sin(n.args[0].evaluate(y));
    case Op::Cos: return std::cos(n.args[0].evaluate(y));
  }
  return 0.0;
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::Add, {a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::Sub, {a, b}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::Mul, {a, b}); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::make(Expr::Op::Div, {a, b}); }
Expr operator-(const Expr& a) { return Expr::make(Expr::Op::Neg, {a}); }
Expr pow(const Expr& base, int exponent) { return Expr::make(Expr::Op::Pow, {base}, 0.0, exponent); }
Expr exp(const Expr& a) { return Expr::make(Expr::Op::Exp, {a}); }
Expr log(const Expr& a) { return Expr::make(Expr::Op::Log, {a}); }
Expr sin(const Expr& a) { return Expr::make(Expr::Op::Sin, {a}); }
Expr cos(const Expr& a) { return Expr::make(Expr::Op::Cos, {a}); }

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n, int m) : text_(text), n_(n), m_(m) {}

  Expr parse() {
    Expr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  std::string_view text_;
  int n_;
  int m_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw Error(ErrorCode::SyntaxError, msg, "byte " + std::to_string(at));
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept('+')) {
        lhs = lhs + term();
      } else if (accept('-')) {
        lhs = lhs - term();
      } else {
        return lhs;
      }
    }
  }

  Expr term() {
    Expr lhs = unary_expr();
    for (;;) {
      if (accept('*')) {
        lhs = lhs * unary_expr();
      } else if (accept('/')) {
        lhs = lhs / unary_expr();
      } else {
        return lhs;
      }
    }
  }

  Expr unary_expr() {
    if (accept('-')) return -unary_expr();
    if (accept('+')) return unary_expr();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (accept('^')) {
      skip_ws();
      const bool negative = accept('-');
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an integer exponent");
      int value = 0;
      auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
      if (ec != std::errc()) fail("exponent out of range", start);
      return pow(base, negative ? -value : value);
    }
    return base;
  }

  Expr primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    const char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (c == '(') {
      ++pos_;
      Expr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word == "exp" || word == "log" || word == "sin" || word == "cos") {
        expect('(');
        Expr inner = expr();
        expect(')');
        if (word == "exp") return exp(inner);
        if (word == "log") return log(inner);
        if (word == "sin") return sin(inner);
        return cos(inner);
      }
      if (word == "x" || word == "z") {
        const std::size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (digits == pos_) fail("variable needs an index", start);
        int index = 0;
        std::from_chars(text_.data() + digits, text_.data() + pos_, index);
        const int limit = word == "x" ? n_ : m_;
        const std::string name(text_.substr(start, pos_ - start));
        if (index < 1 || index > limit) {
          throw Error(ErrorCode::UnknownVariable, "variable '" + name + "' is outside the group's coordinates",
                      "byte " + std::to_string(start));
        }
        return word == "x" ? Expr::variable(index - 1, name) : Expr::variable(n_ + index - 1, name);
      }
      throw Error(ErrorCode::UnknownVariable, "unknown identifier '" + std::string(word) + "'",
                  "byte " + std::to_string(start));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  Expr number() {
    const std::size_t start = pos_;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("malformed number", start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return Expr::constant(value);
  }
};

void print(std::ostringstream& out, const Expr& e) {
  using Op = Expr::Op;
  switch (e.op()) {
    case Op::Constant: {
      std::ostringstream tmp;
      tmp.precision(17);
      tmp << e.value();
      out << tmp.str();
      return;
    }
    case Op::Variable: out << e.name(); return;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div: {
      const char sym = e.op() == Op::Add ? '+' : e.op() == Op::Sub ? '-' : e.op() == Op::Mul ? '*' : '/';
      out << '(';
      print(out, e.arg(0));
      out << sym;
      print(out, e.arg(1));
      out << ')';
      return;
    }
    case Op::Neg: out << "(-"; print(out, e.arg(0)); out << ')'; return;
    case Op::Pow: out << '('; print(out, e.arg(0)); out << ")^" << e.exponent(); return;
    case Op::Exp: out << "exp("; print(out, e.arg(0)); out << ')'; return;
    case Op::Log: out << "log("; print(out, e.arg(0)); out << ')'; return;
    case Op::Sin: out << "sin("; print(out, e.arg(0)); out << ')'; return;
    case Op::Cos: out << "cos("; print(out, e.arg(0)); out << ')'; return;
  }
}

}  // namespace

Expr parse_expr(std::string_view text, int n, int m) { return Parser(text, n, m).parse(); }

std::string to_string(const Expr& e) {
  std::ostringstream out;
  print(out, e);
  return out.str();
}

}  // namespace carnot
