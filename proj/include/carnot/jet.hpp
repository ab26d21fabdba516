#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "carnot/expr.hpp"
#include "carnot/group.hpp"

namespace carnot {

inline constexpr int kMaxJetOrder = 4;
inline constexpr int kDefaultJetOrder = 3;
inline constexpr int kMaxJetVars = 16;

using MultiIndex = std::array<std::uint8_t, kMaxJetVars>;

/// Dense graded enumeration of the multi-indices of total degree <= order in
/// `vars` variables, with the product and shift tables jets need. Layouts are
/// interned per (vars, order) and immutable; the enumeration of a given degree
/// does not depend on the order, so truncation is a prefix copy.
class JetLayout {
 public:
  struct Product {
    int a;
    int b;
    int c;
  };

  static std::shared_ptr<const JetLayout> get(int vars, int order);

  int vars() const { return vars_; }
  int order() const { return order_; }
  int size() const { return static_cast<int>(indices_.size()); }
  /// Number of coefficients of total degree <= d.
  int prefix(int d) const { return prefix_[static_cast<std::size_t>(d)]; }
  const MultiIndex& index(int i) const { return indices_[static_cast<std::size_t>(i)]; }
  int degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }
  /// alpha! for coefficient i.
  double factorial(int i) const { return factorials_[static_cast<std::size_t>(i)]; }
  /// Index of alpha_i + e_v, or -1 when that exceeds the order.
  int raise(int v, int i) const { return raise_[static_cast<std::size_t>(v * size() + i)]; }
  int find(const MultiIndex& alpha) const;
  /// Products (a, b) -> c with deg a + deg b = deg c <= order.
  const std::vector<Product>& products() const { return products_; }

 private:
  JetLayout(int vars, int order);

  int vars_;
  int order_;
  std::vector<MultiIndex> indices_;
  std::vector<int> degrees_;
  std::vector<int> prefix_;
  std::vector<double> factorials_;
  std::vector<int> raise_;
  std::vector<Product> products_;
  std::vector<std::pair<std::uint64_t, int>> lookup_;
};

/// Truncated Taylor expansion sum_alpha c_alpha (y - center)^alpha of order <= k.
/// Binary operations between jets of different orders truncate to the smaller one.
class Jet {
 public:
  Jet(Vector center, int order);

  static Jet constant(const Vector& center, int order, double value);
  static Jet variable(const Vector& center, int order, int v);

  int order() const { return layout_->order(); }
  int vars() const { return layout_->vars(); }
  const Vector& center() const { return center_; }
  const JetLayout& layout() const { return *layout_; }

  double value() const { return coeffs_(0); }
  /// Taylor coefficient c_alpha for layout index i.
  double coefficient(int i) const { return coeffs_(i); }
  const Vector& coefficients() const { return coeffs_; }
  Vector& coefficients() { return coeffs_; }
  /// The partial derivative d^alpha f(center) = alpha! c_alpha.
  double partial(const MultiIndex& alpha) const;
  /// Partial derivative along the listed variables, e.g. {0, 0, 2} = d^3/dy0^2 dy2.
  double partial(std::initializer_list<int> vars) const;
  Vector gradient() const;

  Jet truncated(int order) const;
  /// d/dy_v, one order lower.
  Jet derivative(int v) const;
  /// phi(f) where derivs[j] = phi^(j)(f(center)), j = 0..order.
  Jet compose(std::span<const double> derivs) const;

  Jet& operator+=(const Jet& other);
  Jet& operator-=(const Jet& other);
  Jet& operator*=(double s);
  friend Jet operator+(Jet a, const Jet& b) { return a += b; }
  friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
  friend Jet operator*(Jet a, double s) { return a *= s; }
  friend Jet operator*(double s, Jet a) { return a *= s; }
  friend Jet operator-(Jet a) { return a *= -1.0; }
  friend Jet operator*(const Jet& a, const Jet& b);

 private:
  Jet(Vector center, std::shared_ptr<const JetLayout> layout);

  Vector center_;
  std::shared_ptr<const JetLayout> layout_;
  Vector coeffs_;
};

/// Order-k jet of expr at p. Exact for polynomials; exp/log/sin/cos and negative
/// powers propagate through their Taylor series. Throws OrderTooHigh (k > 4),
/// LogOfNonPositive, DivisionByZero.
Jet eval_jet(const Expr& expr, const Point& p, int order = kDefaultJetOrder);

/// Jet of (field f) at the same center, one order lower. Exact because the
/// field coefficients are affine. Throws OrderExhausted for order-0 input.
Jet vf_apply(const ValidatedSpec& spec, FieldId field, const Jet& f);

/// [A, B] f = A(B f) - B(A f), two orders lower.
Jet bracket(const ValidatedSpec& spec, FieldId a, FieldId b, const Jet& f);

/// Central-difference gradient in ambient coordinates, O(h^2) accurate.
Vector numeric_grad(const Expr& expr, const Point& p, double h);

}  // namespace carnot
