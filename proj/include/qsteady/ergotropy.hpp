#pragma once

#include "qsteady/density.hpp"

namespace qsteady {

/// Work-extraction summary for one state.
struct WorkReport {
  double internal_energy = 0;
  double passive_energy = 0;
  double ergotropy = 0;  ///< internal_energy - passive_energy, >= 0
  std::array<double, 4> populations_sorted{};  ///< eigenvalues of rho, descending
  std::array<double, 4> energies{};            ///< ascending
};

/// Tr(rho H) with the Hamiltonian represented in rho's own basis.
double internal_energy(const DensityMatrix& rho, const CoupledQubitSystem& system);

/// The minimal-energy state unitarily reachable from rho: its eigenvalues
/// sorted descending against ascending energies, diagonal in the energy
/// basis.
DensityMatrix passive_state(const DensityMatrix& rho, const CoupledQubitSystem& system);

/// Maximum work extractable by cyclic unitaries, via the closed-form
/// double sum over state and Hamiltonian eigenpairs.
double ergotropy(const DensityMatrix& rho, const CoupledQubitSystem& system);

/// Independent check: internal energy minus the minimum of
/// sum_k r_perm(k) * energy_k over all 24 assignments. Test oracle only.
double ergotropy_bruteforce(const DensityMatrix& rho, const CoupledQubitSystem& system);

/// Ergotropy of an arbitrary (state, Hamiltonian) pair of 4x4 matrices.
double ergotropy_of(const Matrix4& rho, const Matrix4& hamiltonian);

WorkReport work_report(const DensityMatrix& rho, const CoupledQubitSystem& system);

}  // namespace qsteady
