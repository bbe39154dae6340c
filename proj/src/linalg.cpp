#include "qsteady/linalg.hpp"

#include <stdexcept>

namespace qsteady {

double hermiticity_error(const Matrix4& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

EigenSystem hermitian_eig(const Matrix4& m, double tol) {
  if (hermiticity_error(m) > tol) {
    throw std::invalid_argument("hermitian_eig: input not Hermitian within tolerance");
  }
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(((m + m.adjoint()) / 2.0).eval());
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("hermitian_eig: eigensolver failed to converge");
  }
  EigenSystem out;
  out.vectors = solver.eigenvectors();
  for (int k = 0; k < 4; ++k) {
    out.values[k] = solver.eigenvalues()(k);
    // Phase convention: largest-magnitude component real and positive;
    // first index wins on exact magnitude ties.
    int imax = 0;
    double best = -1.0;
    for (int i = 0; i < 4; ++i) {
      const double a = std::abs(out.vectors(i, k));
      if (a > best) {
        best = a;
        imax = i;
      }
    }
    const Complex pivot = out.vectors(imax, k);
    if (std::abs(pivot) > 0.0) {
      out.vectors.col(k) *= std::conj(pivot) / std::abs(pivot);
    }
  }
  return out;
}

Vector16 vec(const Matrix4& m) {
  Vector16 v;
  for (int c = 0; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) {
      v(4 * c + r) = m(r, c);
    }
  }
  return v;
}

Matrix4 unvec(const Vector16& v) {
  Matrix4 m;
  for (int c = 0; c < 4; ++c) {
    for (int r = 0; r < 4; ++r) {
      m(r, c) = v(4 * c + r);
    }
  }
  return m;
}

Matrix16 sandwich_op(const Matrix4& a, const Matrix4& b) {
  Matrix16 s = Matrix16::Zero();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      s.block<4, 4>(4 * i, 4 * j) = b(j, i) * a;
    }
  }
  return s;
}

Matrix16 left_op(const Matrix4& a) { return sandwich_op(a, Matrix4::Identity()); }

Matrix16 right_op(const Matrix4& b) { return sandwich_op(Matrix4::Identity(), b); }

}  // namespace qsteady
