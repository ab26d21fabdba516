#include "carnot/group.hpp"

#include <cmath>

namespace carnot {

namespace {

std::string matrix_location(int k) { return "/B/" + std::to_string(k); }

std::string entry_location(int k, int i, int j) {
  return "/B/" + std::to_string(k) + "/" + std::to_string(i) + "/" + std::to_string(j);
}

int numerical_rank(const Matrix& a) {
  if (a.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const Vector& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double threshold = 1e-10 * sv(0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold) ++rank;
  }
  return rank;
}

}  // namespace

ValidatedSpec validate_spec(GroupSpec spec) {
  if (spec.n < 1) throw Error(ErrorCode::InvalidSpec, "horizontal dimension n must be positive", "/n");
  if (spec.m < 1) throw Error(ErrorCode::InvalidSpec, "vertical dimension m must be positive", "/m");
  if (static_cast<int>(spec.B.size()) != spec.m) {
    throw Error(ErrorCode::InvalidSpec,
                "expected " + std::to_string(spec.m) + " matrices, got " + std::to_string(spec.B.size()), "/B");
  }

  double scale = 0.0;
  for (int k = 0; k < spec.m; ++k) {
    const Matrix& b = spec.B[static_cast<std::size_t>(k)];
    if (b.rows() != spec.n || b.cols() != spec.n) {
      throw Error(ErrorCode::InvalidSpec, "matrix is not n x n", matrix_location(k));
    }
    if (!b.allFinite()) throw Error(ErrorCode::InvalidSpec, "matrix has non-finite entries", matrix_location(k));
    scale = std::max(scale, b.cwiseAbs().maxCoeff());
  }

  const double skew_tol = 1e-12 * std::max(1.0, scale);
  for (int k = 0; k < spec.m; ++k) {
    const Matrix& b = spec.B[static_cast<std::size_t>(k)];
    for (int i = 0; i < spec.n; ++i) {
      for (int j = i; j < spec.n; ++j) {
        if (std::abs(b(i, j) + b(j, i)) > skew_tol) {
          throw Error(ErrorCode::SkewSymmetryViolation,
                      "B[" + std::to_string(k) + "] is not skew-symmetric at (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")",
                      entry_location(k, i, j));
        }
      }
    }
  }

  const int pairs = spec.n * (spec.n - 1) / 2;
  Matrix bracket(spec.m, pairs);
  for (int k = 0; k < spec.m; ++k) {
    int col = 0;
    for (int i = 0; i < spec.n; ++i) {
      for (int j = i + 1; j < spec.n; ++j) bracket(k, col++) = spec.B[static_cast<std::size_t>(k)](i, j);
    }
  }

  // A vanishing B[k] means Z_k is never produced by a bracket.
  for (int k = 0; k < spec.m; ++k) {
    if (spec.B[static_cast<std::size_t>(k)].norm() <= 1e-10 * std::max(scale, 1e-300) || scale == 0.0) {
      throw Error(ErrorCode::NotBracketGenerating,
                  "B[" + std::to_string(k) + "] vanishes, so [V1, V1] misses direction z" + std::to_string(k + 1),
                  matrix_location(k));
    }
  }

  // For skew matrices the upper triangles determine the matrices, so the
  // bracket-matrix rank equals the rank of the stacked B's.
  const int rank = numerical_rank(bracket);
  if (rank < spec.m) {
    for (int k = 1; k < spec.m; ++k) {
      if (numerical_rank(bracket.topRows(k + 1)) < k + 1) {
        throw Error(ErrorCode::DependentMatrices,
                    "B[" + std::to_string(k) + "] is a linear combination of the preceding matrices",
                    matrix_location(k));
      }
    }
    throw Error(ErrorCode::NotBracketGenerating,
                "bracket map has rank " + std::to_string(rank) + " < m = " + std::to_string(spec.m), "/B");
  }

  ValidatedSpec out;
  auto data = std::make_shared<ValidatedSpec::Data>();
  data->spec = std::move(spec);
  data->bracket_rank = rank;
  data->bracket_matrix = std::move(bracket);
  out.data_ = std::move(data);
  return out;
}

GroupSpec builtin_heisenberg() {
  GroupSpec spec;
  spec.name = "heisenberg";
  spec.n = 2;
  spec.m = 1;
  Matrix b(2, 2);
  b << 0.0, 1.0, -1.0, 0.0;
  spec.B.push_back(b);
  return spec;
}

GroupSpec heisenberg_product(int copies) {
  if (copies < 1) throw Error(ErrorCode::InvalidArgument, "need at least one Heisenberg factor");
  GroupSpec spec;
  spec.name = "heisenberg^" + std::to_string(copies);
  spec.n = 2 * copies;
  spec.m = copies;
  for (int k = 0; k < copies; ++k) {
    Matrix b = Matrix::Zero(spec.n, spec.n);
    b(2 * k, 2 * k + 1) = 1.0;
    b(2 * k + 1, 2 * k) = -1.0;
    spec.B.push_back(b);
  }
  return spec;
}

bool is_heisenberg_type(const ValidatedSpec& spec) { return spec.n() == 2 && spec.m() == 1; }

std::string to_string(FieldId field) {
  switch (field.kind) {
    case FieldId::Kind::X: return "X" + std::to_string(field.index + 1);
    case FieldId::Kind::Z: return "Z" + std::to_string(field.index + 1);
    case FieldId::Kind::E: return "E";
  }
  return "?";
}

AffineField affine_field(const ValidatedSpec& spec, FieldId field) {
  const int n = spec.n();
  const int dim = spec.dim();
  AffineField out{Vector::Zero(dim), Matrix::Zero(dim, dim)};
  switch (field.kind) {
    case FieldId::Kind::X: {
      const int i = field.index;
      if (i < 0 || i >= n) throw Error(ErrorCode::InvalidArgument, "horizontal field index out of range");
      out.constant(i) = 1.0;
      for (int k = 0; k < spec.m(); ++k) {
        for (int j = 0; j < n; ++j) out.linear(n + k, j) = -0.5 * spec.gamma(i, j, k);
      }
      break;
    }
    case FieldId::Kind::Z: {
      const int k = field.index;
      if (k < 0 || k >= spec.m()) throw Error(ErrorCode::InvalidArgument, "vertical field index out of range");
      out.constant(n + k) = 1.0;
      break;
    }
    case FieldId::Kind::E: {
      for (int i = 0; i < n; ++i) out.linear(i, i) = 1.0;
      for (int k = 0; k < spec.m(); ++k) out.linear(n + k, n + k) = 2.0;
      break;
    }
  }
  return out;
}

Frame frame_at(const ValidatedSpec& spec, const Point& p) {
  const Vector y = p.ambient();
  Frame frame{Matrix(spec.n(), spec.dim()), Matrix(spec.m(), spec.dim()), Vector()};
  for (int i = 0; i < spec.n(); ++i) frame.X.row(i) = affine_field(spec, FieldId::X(i)).at(y).transpose();
  for (int k = 0; k < spec.m(); ++k) frame.Z.row(k) = affine_field(spec, FieldId::Z(k)).at(y).transpose();
  frame.E = affine_field(spec, FieldId::E()).at(y);
  return frame;
}

}  // namespace carnot
