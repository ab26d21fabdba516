#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>

#include "carnot/types.hpp"

namespace carnot {

template <typename Scalar>
struct JacobiResult {
  VectorT<Scalar> values;   // ascending
  MatrixT<Scalar> vectors;  // column i pairs with values(i)
  int sweeps = 0;
  bool converged = false;
};

/// Cyclic Jacobi eigen-decomposition of a small dense symmetric matrix.
/// Iterates until the off-diagonal Frobenius norm drops below
/// tol * max(1, ||A||_F) or max_sweeps is reached.
template <typename Derived>
JacobiResult<typename Derived::Scalar> jacobi_eigen(const Eigen::MatrixBase<Derived>& input,
                                                    typename Derived::Scalar tol = 1e-12, int max_sweeps = 100) {
  using Scalar = typename Derived::Scalar;
  using std::abs;
  using std::sqrt;
  const Eigen::Index n = input.rows();
  MatrixT<Scalar> a = (input + input.transpose()) / Scalar(2);
  MatrixT<Scalar> v = MatrixT<Scalar>::Identity(n, n);
  const Scalar scale = std::max(Scalar(1), a.norm());

  auto off_norm = [&] {
    Scalar s(0);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        if (i != j) s += a(i, j) * a(i, j);
    return sqrt(s);
  };

  JacobiResult<Scalar> out;
  for (out.sweeps = 0; out.sweeps < max_sweeps; ++out.sweeps) {
    if (off_norm() <= tol * scale) {
      out.converged = true;
      break;
    }
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == Scalar(0)) continue;
        const Scalar theta = (a(q, q) - a(p, p)) / (Scalar(2) * a(p, q));
        const Scalar t = (theta >= Scalar(0) ? Scalar(1) : Scalar(-1)) / (abs(theta) + sqrt(theta * theta + Scalar(1)));
        const Scalar c = Scalar(1) / sqrt(t * t + Scalar(1));
        const Scalar s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar akp = a(k, p);
          const Scalar akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar apk = a(p, k);
          const Scalar aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Scalar vkp = v(k, p);
          const Scalar vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!out.converged && off_norm() <= tol * scale) out.converged = true;

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return a(i, i) < a(j, j); });
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = a(order[static_cast<std::size_t>(i)], order[static_cast<std::size_t>(i)]);
    out.vectors.col(i) = v.col(order[static_cast<std::size_t>(i)]);
  }
  return out;
}

}  // namespace carnot
