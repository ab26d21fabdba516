#pragma once

#include <memory>
#include <string>
#include <vector>

#include "carnot/error.hpp"
#include "carnot/types.hpp"

namespace carnot {

/// A step-2 Carnot group R^n x R^m given by m skew-symmetric n x n matrices.
/// Structure constants are read as gamma_ij^k = B[k](i, j).
struct GroupSpec {
  std::string name;
  int n = 0;
  int m = 0;
  std::vector<Matrix> B;
};

/// A GroupSpec whose invariants (skew-symmetry, independence, bracket generation)
/// have been certified. Cheap to copy; the matrices are shared.
class ValidatedSpec {
 public:
  const GroupSpec& spec() const { return data_->spec; }
  const std::string& name() const { return data_->spec.name; }
  int n() const { return data_->spec.n; }
  int m() const { return data_->spec.m; }
  int dim() const { return n() + m(); }
  const Matrix& B(int k) const { return data_->spec.B[static_cast<std::size_t>(k)]; }
  double gamma(int i, int j, int k) const { return B(k)(i, j); }
  int bracket_rank() const { return data_->bracket_rank; }
  /// m x n(n-1)/2 matrix of gamma_ij^k over index pairs i<j (lexicographic).
  const Matrix& bracket_matrix() const { return data_->bracket_matrix; }

 private:
  struct Data {
    GroupSpec spec;
    int bracket_rank = 0;
    Matrix bracket_matrix;
  };
  std::shared_ptr<const Data> data_;

  friend ValidatedSpec validate_spec(GroupSpec spec);
};

/// Checks the three structural invariants. Throws SkewSymmetryViolation,
/// DependentMatrices or NotBracketGenerating naming the offending entry,
/// and InvalidSpec for shape problems.
ValidatedSpec validate_spec(GroupSpec spec);

/// The Heisenberg group: n = 2, m = 1, B = [[0, 1], [-1, 0]].
GroupSpec builtin_heisenberg();

/// Direct product of `copies` Heisenberg groups (n = 2c, m = c).
GroupSpec heisenberg_product(int copies);

/// True when n = 2, m = 1: the group is then isomorphic to Heisenberg by a
/// rescaling of z.
bool is_heisenberg_type(const ValidatedSpec& spec);

template <typename Scalar>
PointT<Scalar> group_mul(const ValidatedSpec& spec, const PointT<Scalar>& p, const PointT<Scalar>& q) {
  PointT<Scalar> r{p.x + q.x, p.z + q.z};
  for (int k = 0; k < spec.m(); ++k) {
    r.z(k) += Scalar(0.5) * p.x.dot(spec.B(k).template cast<Scalar>() * q.x);
  }
  return r;
}

/// The inverse is (-x, -z) because <B x, x> = 0 for skew B.
template <typename Scalar>
PointT<Scalar> group_inv(const ValidatedSpec& /*spec*/, const PointT<Scalar>& p) {
  return {-p.x, -p.z};
}

template <typename Scalar>
PointT<Scalar> dilate(const ValidatedSpec& /*spec*/, Scalar t, const PointT<Scalar>& p) {
  if (!(t > Scalar(0))) throw Error(ErrorCode::NonPositiveScale, "dilation scale must be positive");
  return {t * p.x, t * t * p.z};
}

/// Identifies one of the frame fields X_i, Z_k or the weighted Euler field E.
struct FieldId {
  enum class Kind { X, Z, E };
  Kind kind = Kind::X;
  int index = 0;

  static FieldId X(int i) { return {Kind::X, i}; }
  static FieldId Z(int k) { return {Kind::Z, k}; }
  static FieldId E() { return {Kind::E, 0}; }
};

std::string to_string(FieldId field);

/// Ambient coefficients of a vector field that are affine in the ambient
/// coordinates y: a(y) = constant + linear * y.
struct AffineField {
  Vector constant;
  Matrix linear;

  Vector at(const Vector& y) const { return constant + linear * y; }
};

AffineField affine_field(const ValidatedSpec& spec, FieldId field);

/// Left-invariant frame and Euler field evaluated at a point. Row i of X holds
/// the coefficients of X_i on (d/dx_1..d/dx_n, d/dz_1..d/dz_m); likewise Z.
struct Frame {
  Matrix X;
  Matrix Z;
  Vector E;
};

Frame frame_at(const ValidatedSpec& spec, const Point& p);

}  // namespace carnot
