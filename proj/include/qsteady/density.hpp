#pragma once

#include <array>

#include "qsteady/system.hpp"

namespace qsteady {

/// 4x4 state matrix tagged with the basis its entries refer to.
///
/// make() enforces Hermiticity (1e-12) and unit trace (1e-10). Positivity
/// is deliberately a diagnostic rather than a constructor gate: the
/// non-secular generator is not completely positive and its exact steady
/// states can carry eigenvalues slightly below zero at weak occupation.
struct DensityMatrix {
  Matrix4 entries = Matrix4::Zero();
  Basis basis = Basis::Energy;

  static DensityMatrix make(const Matrix4& entries, Basis basis);

  void require_valid() const;  // Hermiticity + trace gates
  double trace_error() const;
  double hermiticity_error() const;
  double min_eigenvalue() const;
  double purity() const;  // Tr(rho^2)
  std::array<double, 4> populations() const;
};

/// Exact change of basis by conjugation with the system's basis unitary.
/// Trace, Hermiticity and spectrum are preserved; a round trip is the
/// identity up to floating-point rounding.
DensityMatrix to_basis(const DensityMatrix& rho, const CoupledQubitSystem& system,
                       Basis target);

DensityMatrix diagonal_state(const std::array<double, 4>& populations, Basis basis);
DensityMatrix pure_state(int level, Basis basis);
DensityMatrix maximally_mixed(Basis basis);

}  // namespace qsteady
