#include "qsteady/density.hpp"

#include <stdexcept>

namespace qsteady {

DensityMatrix DensityMatrix::make(const Matrix4& entries, Basis basis) {
  DensityMatrix rho{entries, basis};
  rho.require_valid();
  return rho;
}

void DensityMatrix::require_valid() const {
  if (hermiticity_error() > 1e-12) {
    throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-12");
  }
  if (trace_error() > 1e-10) {
    throw std::invalid_argument("DensityMatrix: trace deviates from 1 beyond 1e-10");
  }
}

double DensityMatrix::trace_error() const {
  return std::abs(entries.trace() - Complex(1.0, 0.0));
}

double DensityMatrix::hermiticity_error() const {
  return qsteady::hermiticity_error(entries);
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<Matrix4> solver(((entries + entries.adjoint()) / 2.0).eval(),
                                                Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

double DensityMatrix::purity() const { return (entries * entries).trace().real(); }

std::array<double, 4> DensityMatrix::populations() const {
  return {entries(0, 0).real(), entries(1, 1).real(), entries(2, 2).real(),
          entries(3, 3).real()};
}

DensityMatrix to_basis(const DensityMatrix& rho, const CoupledQubitSystem& system,
                       Basis target) {
  rho.require_valid();
  if (rho.basis == target) {
    return rho;
  }
  const Matrix4& u = system.basis_unitary;
  Matrix4 out;
  if (target == Basis::Standard) {
    out = u * rho.entries * u.adjoint();
  } else {
    out = u.adjoint() * rho.entries * u;
  }
  return DensityMatrix{out, target};
}

DensityMatrix diagonal_state(const std::array<double, 4>& populations, Basis basis) {
  Matrix4 m = Matrix4::Zero();
  for (int i = 0; i < 4; ++i) {
    m(i, i) = populations[i];
  }
  return DensityMatrix::make(m, basis);
}

DensityMatrix pure_state(int level, Basis basis) {
  if (level < 0 || level > 3) {
    throw std::invalid_argument("pure_state: level must be in 0..3");
  }
  std::array<double, 4> p{};
  p[level] = 1.0;
  return diagonal_state(p, basis);
}

DensityMatrix maximally_mixed(Basis basis) {
  return diagonal_state({0.25, 0.25, 0.25, 0.25}, basis);
}

}  // namespace qsteady
