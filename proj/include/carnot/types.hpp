#pragma once

#include <Eigen/Dense>

namespace carnot {

template <typename Scalar>
using VectorT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatrixT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vector = VectorT<double>;
using Matrix = MatrixT<double>;

/// A point (x, z) of R^n x R^m in exponential-type coordinates of a step-2 group.
template <typename Scalar>
struct PointT {
  VectorT<Scalar> x;
  VectorT<Scalar> z;

  PointT() = default;
  PointT(VectorT<Scalar> x_, VectorT<Scalar> z_) : x(std::move(x_)), z(std::move(z_)) {}

  static PointT origin(int n, int m) { return {VectorT<Scalar>::Zero(n), VectorT<Scalar>::Zero(m)}; }

  /// Ambient coordinates (x_1..x_n, z_1..z_m).
  VectorT<Scalar> ambient() const {
    VectorT<Scalar> v(x.size() + z.size());
    v << x, z;
    return v;
  }

  static PointT from_ambient(const VectorT<Scalar>& v, int n) {
    return {v.head(n), v.tail(v.size() - n)};
  }

  bool all_finite() const { return x.allFinite() && z.allFinite(); }
};

using Point = PointT<double>;

}  // namespace carnot
