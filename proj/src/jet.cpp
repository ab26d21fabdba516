#include "carnot/jet.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>

#include "carnot/error.hpp"

namespace carnot {

namespace {

std::uint64_t pack(const MultiIndex& alpha) {
  std::uint64_t key = 0;
  for (int v = 0; v < kMaxJetVars; ++v) key |= static_cast<std::uint64_t>(alpha[static_cast<std::size_t>(v)]) << (4 * v);
  return key;
}

void enumerate_degree(int vars, int var, int remaining, MultiIndex& current, std::vector<MultiIndex>& out) {
  if (var == vars - 1) {
    current[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(remaining);
    out.push_back(current);
    current[static_cast<std::size_t>(var)] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(e);
    enumerate_degree(vars, var + 1, remaining - e, current, out);
  }
  current[static_cast<std::size_t>(var)] = 0;
}

}  // namespace

JetLayout::JetLayout(int vars, int order) : vars_(vars), order_(order) {
  for (int d = 0; d <= order; ++d) {
    MultiIndex current{};
    enumerate_degree(vars, 0, d, current, indices_);
    prefix_.push_back(static_cast<int>(indices_.size()));
  }
  const int n = size();
  degrees_.resize(static_cast<std::size_t>(n));
  factorials_.resize(static_cast<std::size_t>(n));
  lookup_.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    int deg = 0;
    double fact = 1.0;
    for (int v = 0; v < vars; ++v) {
      const int e = indices_[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)];
      deg += e;
      for (int j = 2; j <= e; ++j) fact *= j;
    }
    degrees_[static_cast<std::size_t>(i)] = deg;
    factorials_[static_cast<std::size_t>(i)] = fact;
    lookup_.emplace_back(pack(indices_[static_cast<std::size_t>(i)]), i);
  }
  std::sort(lookup_.begin(), lookup_.end());

  raise_.assign(static_cast<std::size_t>(vars * n), -1);
  for (int v = 0; v < vars; ++v) {
    for (int i = 0; i < n; ++i) {
      if (degree(i) == order) continue;
      MultiIndex up = index(i);
      up[static_cast<std::size_t>(v)] += 1;
      raise_[static_cast<std::size_t>(v * n + i)] = find(up);
    }
  }

  for (int a = 0; a < n; ++a) {
    const int room = order - degree(a);
    for (int b = 0; b < prefix(room); ++b) {
      MultiIndex sum{};
      for (int v = 0; v < vars; ++v) {
        sum[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(index(a)[static_cast<std::size_t>(v)] +
                                                                     index(b)[static_cast<std::size_t>(v)]);
      }
      products_.push_back({a, b, find(sum)});
    }
  }
}

int JetLayout::find(const MultiIndex& alpha) const {
  const std::uint64_t key = pack(alpha);
  auto it = std::lower_bound(lookup_.begin(), lookup_.end(), std::make_pair(key, -1));
  if (it == lookup_.end() || it->first != key) return -1;
  return it->second;
}

std::shared_ptr<const JetLayout> JetLayout::get(int vars, int order) {
  if (order < 0 || order > kMaxJetOrder) {
    throw Error(ErrorCode::OrderTooHigh, "jet order " + std::to_string(order) + " outside 0.." + std::to_string(kMaxJetOrder));
  }
  if (vars < 1 || vars > kMaxJetVars) {
    throw Error(ErrorCode::InvalidArgument, "jets support 1.." + std::to_string(kMaxJetVars) + " variables (n + m)");
  }
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::shared_ptr<const JetLayout>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[{vars, order}];
  if (!slot) slot = std::shared_ptr<const JetLayout>(new JetLayout(vars, order));
  return slot;
}

Jet::Jet(Vector center, std::shared_ptr<const JetLayout> layout)
    : center_(std::move(center)), layout_(std::move(layout)), coeffs_(Vector::Zero(layout_->size())) {}

Jet::Jet(Vector center, int order) : Jet(center, JetLayout::get(static_cast<int>(center.size()), order)) {}

Jet Jet::constant(const Vector& center, int order, double value) {
  Jet j(center, order);
  j.coeffs_(0) = value;
  return j;
}

Jet Jet::variable(const Vector& center, int order, int v) {
  Jet j(center, order);
  j.coeffs_(0) = center(v);
  if (order >= 1) {
    MultiIndex e{};
    e[static_cast<std::size_t>(v)] = 1;
    j.coeffs_(j.layout_->find(e)) = 1.0;
  }
  return j;
}

double Jet::partial(const MultiIndex& alpha) const {
  const int i = layout_->find(alpha);
  if (i < 0) throw Error(ErrorCode::OrderExhausted, "requested derivative exceeds jet order");
  return layout_->factorial(i) * coeffs_(i);
}

double Jet::partial(std::initializer_list<int> vars) const {
  MultiIndex alpha{};
  for (int v : vars) alpha[static_cast<std::size_t>(v)] += 1;
  return partial(alpha);
}

Vector Jet::gradient() const {
  if (order() < 1) throw Error(ErrorCode::OrderExhausted, "gradient needs a jet of order >= 1");
  Vector g(vars());
  for (int v = 0; v < vars(); ++v) g(v) = coeffs_(layout_->raise(v, 0));
  return g;
}

Jet Jet::truncated(int order) const {
  if (order > this->order()) throw Error(ErrorCode::OrderExhausted, "cannot raise jet order by truncation");
  if (order == this->order()) return *this;
  Jet out(center_, JetLayout::get(vars(), order));
  out.coeffs_ = coeffs_.head(out.layout_->size());
  return out;
}

Jet Jet::derivative(int v) const {
  if (order() < 1) throw Error(ErrorCode::OrderExhausted, "cannot differentiate an order-0 jet");
  Jet out(center_, JetLayout::get(vars(), order() - 1));
  for (int i = 0; i < out.layout_->size(); ++i) {
    const int src = layout_->raise(v, i);
    const double mult = static_cast<double>(layout_->index(src)[static_cast<std::size_t>(v)]);
    out.coeffs_(i) = mult * coeffs_(src);
  }
  return out;
}

Jet Jet::compose(std::span<const double> derivs) const {
  // phi(u0 + h) = sum_j phi^(j)(u0) h^j / j!, h having no constant term, so
  // h^j vanishes beyond the jet order.
  Jet h = *this;
  h.coeffs_(0) = 0.0;
  Jet out = Jet::constant(center_, order(), derivs[0]);
  Jet power = Jet::constant(center_, order(), 1.0);
  double factorial = 1.0;
  for (int j = 1; j <= order(); ++j) {
    power = power * h;
    factorial *= j;
    out += power * (derivs[static_cast<std::size_t>(j)] / factorial);
  }
  return out;
}

Jet& Jet::operator+=(const Jet& other) {
  if (other.order() < order()) *this = truncated(other.order());
  coeffs_ += other.coeffs_.head(layout_->size());
  return *this;
}

Jet& Jet::operator-=(const Jet& other) {
  if (other.order() < order()) *this = truncated(other.order());
  coeffs_ -= other.coeffs_.head(layout_->size());
  return *this;
}

Jet& Jet::operator*=(double s) {
  coeffs_ *= s;
  return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
  const Jet& lo = a.order() <= b.order() ? a : b;
  Jet out(lo.center_, lo.layout_);
  const auto& table = lo.layout_->products();
  const double* ca = a.coeffs_.data();
  const double* cb = b.coeffs_.data();
  double* cc = out.coeffs_.data();
  for (const auto& p : table) cc[p.c] += ca[p.a] * cb[p.b];
  return out;
}

namespace {

Jet jet_rec(const Expr& e, const Vector& y, int k) {
  using Op = Expr::Op;
  std::array<double, kMaxJetOrder + 1> d{};
  switch (e.op()) {
    case Op::Constant: return Jet::constant(y, k, e.value());
    case Op::Variable:
      if (e.variable_index() >= y.size()) {
        throw Error(ErrorCode::UnknownVariable, "variable '" + e.name() + "' is outside the point's coordinates");
      }
      return Jet::variable(y, k, e.variable_index());
    case Op::Add: return jet_rec(e.arg(0), y, k) + jet_rec(e.arg(1), y, k);
    case Op::Sub: return jet_rec(e.arg(0), y, k) - jet_rec(e.arg(1), y, k);
    case Op::Mul: return jet_rec(e.arg(0), y, k) * jet_rec(e.arg(1), y, k);
    case Op::Neg: return -jet_rec(e.arg(0), y, k);
    case Op::Div: {
      Jet den = jet_rec(e.arg(1), y, k);
      const double u = den.value();
      if (u == 0.0) throw Error(ErrorCode::DivisionByZero, "division by zero in " + to_string(e));
      double fact = 1.0;
      for (int j = 0; j <= k; ++j) {
        if (j > 0) fact *= j;
        d[static_cast<std::size_t>(j)] = (j % 2 == 0 ? 1.0 : -1.0) * fact / std::pow(u, j + 1);
      }
      return jet_rec(e.arg(0), y, k) * den.compose(d);
    }
    case Op::Pow: {
      Jet base = jet_rec(e.arg(0), y, k);
      int p = e.exponent();
      if (p >= 0) {
        Jet out = Jet::constant(y, k, 1.0);
        while (p > 0) {
          if (p & 1) out = out * base;
          p >>= 1;
          if (p > 0) base = base * base;
        }
        return out;
      }
      const double u = base.value();
      if (u == 0.0) throw Error(ErrorCode::DivisionByZero, "negative power of zero in " + to_string(e));
      double falling = 1.0;
      for (int j = 0; j <= k; ++j) {
        d[static_cast<std::size_t>(j)] = falling * std::pow(u, p - j);
        falling *= static_cast<double>(p - j);
      }
      return base.compose(d);
    }
    case Op::Exp: {
      Jet u = jet_rec(e.arg(0), y, k);
      d.fill(std::exp(u.value()));
      return u.compose(d);
    }
    case Op::Log: {
      Jet u = jet_rec(e.arg(0), y, k);
      const double u0 = u.value();
      if (!(u0 > 0.0)) throw Error(ErrorCode::LogOfNonPositive, "log argument " + std::to_string(u0) + " is not positive");
      d[0] = std::log(u0);
      double fact = 1.0;
      for (int j = 1; j <= k; ++j) {
        if (j > 1) fact *= (j - 1);
        d[static_cast<std::size_t>(j)] = (j % 2 == 1 ? 1.0 : -1.0) * fact / std::pow(u0, j);
      }
      return u.compose(d);
    }
    case Op::Sin:
    case Op::Cos: {
      Jet u = jet_rec(e.arg(0), y, k);
      const double s = std::sin(u.value());
      const double c = std::cos(u.value());
      const std::array<double, 4> cycle = e.op() == Op::Sin ? std::array<double, 4>{s, c, -s, -c}
                                                             : std::array<double, 4>{c, -s, -c, s};
      for (int j = 0; j <= k; ++j) d[static_cast<std::size_t>(j)] = cycle[static_cast<std::size_t>(j % 4)];
      return u.compose(d);
    }
  }
  return Jet::constant(y, k, 0.0);
}

}  // namespace

Jet eval_jet(const Expr& expr, const Point& p, int order) {
  if (order > kMaxJetOrder) {
    throw Error(ErrorCode::OrderTooHigh, "jet order " + std::to_string(order) + " exceeds " + std::to_string(kMaxJetOrder));
  }
  if (order < 0) throw Error(ErrorCode::InvalidArgument, "jet order must be non-negative");
  return jet_rec(expr, p.ambient(), order);
}

Jet vf_apply(const ValidatedSpec& spec, FieldId field, const Jet& f) {
  if (f.order() < 1) throw Error(ErrorCode::OrderExhausted, "applying " + to_string(field) + " needs order >= 1");
  if (f.vars() != spec.dim()) throw Error(ErrorCode::InvalidArgument, "jet dimension does not match the group");
  const AffineField a = affine_field(spec, field);
  const Vector& y = f.center();
  const int q = f.order() - 1;
  Jet out(y, q);
  for (int v = 0; v < spec.dim(); ++v) {
    const double at_center = a.constant(v) + a.linear.row(v).dot(y);
    const bool has_linear = q >= 1 && a.linear.row(v).any();
    if (at_center == 0.0 && !has_linear) continue;
    Jet dv = f.derivative(v);
    if (!has_linear) {
      out += dv * at_center;
      continue;
    }
    Jet coef = Jet::constant(y, q, at_center);
    for (int w = 0; w < spec.dim(); ++w) {
      if (a.linear(v, w) != 0.0) coef.coefficients()(coef.layout().raise(w, 0)) = a.linear(v, w);
    }
    out += coef * dv;
  }
  return out;
}

Jet bracket(const ValidatedSpec& spec, FieldId a, FieldId b, const Jet& f) {
  if (f.order() < 2) throw Error(ErrorCode::OrderExhausted, "a bracket needs a jet of order >= 2");
  return vf_apply(spec, a, vf_apply(spec, b, f)) - vf_apply(spec, b, vf_apply(spec, a, f));
}

Vector numeric_grad(const Expr& expr, const Point& p, double h) {
  if (!(h > 0.0)) throw Error(ErrorCode::InvalidArgument, "finite-difference step must be positive");
  const Vector y = p.ambient();
  Vector g(y.size());
  Vector probe = y;
  for (Eigen::Index v = 0; v < y.size(); ++v) {
    probe(v) = y(v) + h;
    const double up = expr.evaluate(std::span<const double>(probe.data(), static_cast<std::size_t>(probe.size())));
    probe(v) = y(v) - h;
    const double down = expr.evaluate(std::span<const double>(probe.data(), static_cast<std::size_t>(probe.size())));
    probe(v) = y(v);
    g(v) = (up - down) / (2.0 * h);
  }
  return g;
}

}  // namespace carnot
