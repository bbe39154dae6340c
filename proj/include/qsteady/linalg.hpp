#pragma once

#include <array>
#include <complex>

#include <Eigen/Dense>

namespace qsteady {

using Complex = std::complex<double>;
using Matrix4 = Eigen::Matrix4cd;
using Vector4 = Eigen::Vector4cd;
using Matrix16 = Eigen::Matrix<Complex, 16, 16>;
using Vector16 = Eigen::Matrix<Complex, 16, 1>;

/// Ascending eigenvalues with matching orthonormal eigenvectors as columns.
struct EigenSystem {
  std::array<double, 4> values;
  Matrix4 vectors;
};

double hermiticity_error(const Matrix4& m);

/// Eigendecomposition of a 4x4 Hermitian matrix. Eigenvalues come out
/// ascending; each eigenvector is rephased so that its largest-magnitude
/// component is real and positive, which makes the output deterministic.
/// Throws std::invalid_argument if the input is farther than `tol` from
/// Hermitian.
EigenSystem hermitian_eig(const Matrix4& m, double tol = 1e-10);

// Column-stacking vectorization and its inverse: vec index = 4*col + row.
Vector16 vec(const Matrix4& m);
Matrix4 unvec(const Vector16& v);

/// Superoperator of rho -> A rho B under column stacking: B^T (x) A.
Matrix16 sandwich_op(const Matrix4& a, const Matrix4& b);
Matrix16 left_op(const Matrix4& a);   // rho -> A rho
Matrix16 right_op(const Matrix4& b);  // rho -> rho B

}  // namespace qsteady
