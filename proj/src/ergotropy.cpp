#include "qsteady/ergotropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qsteady {

double internal_energy(const DensityMatrix& rho, const CoupledQubitSystem& system) {
  rho.require_valid();
  const Complex value = (rho.entries * system.hamiltonian(rho.basis)).trace();
  if (std::abs(value.imag()) > 1e-10 * std::max(1.0, std::abs(value.real()))) {
    throw std::runtime_error("internal_energy: unexpected imaginary residue");
  }
  return value.real();
}

DensityMatrix passive_state(const DensityMatrix& rho, const CoupledQubitSystem& system) {
  const DensityMatrix rho_e = to_basis(rho, system, Basis::Energy);
  const EigenSystem es = hermitian_eig(rho_e.entries);
  // Descending eigenvalues against ascending energies.
  return diagonal_state({es.values[3], es.values[2], es.values[1], es.values[0]},
                        Basis::Energy);
}

double ergotropy(const DensityMatrix& rho, const CoupledQubitSystem& system) {
  const DensityMatrix rho_e = to_basis(rho, system, Basis::Energy);
  const EigenSystem es = hermitian_eig(rho_e.entries);
  double value = 0.0;
  for (int n = 0; n < 4; ++n) {
    const int k = 3 - n;  // n-th largest eigenvalue
    for (int m = 0; m < 4; ++m) {
      const double overlap2 = std::norm(es.vectors(m, k));
      value += es.values[k] * system.energies[m] * (overlap2 - (m == n ? 1.0 : 0.0));
    }
  }
  return value;
}

double ergotropy_bruteforce(const DensityMatrix& rho, const CoupledQubitSystem& system) {
  const DensityMatrix rho_e = to_basis(rho, system, Basis::Energy);
  const EigenSystem es = hermitian_eig(rho_e.entries);
  const double internal = internal_energy(rho, system);

  std::array<int, 4> perm{0, 1, 2, 3};
  double best = std::numeric_limits<double>::infinity();
  do {
    double energy = 0.0;
    for (int k = 0; k < 4; ++k) {
      energy += es.values[perm[k]] * system.energies[k];
    }
    best = std::min(best, energy);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return internal - best;
}

double ergotropy_of(const Matrix4& rho, const Matrix4& hamiltonian) {
  const EigenSystem state = hermitian_eig(rho);
  const EigenSystem ham = hermitian_eig(hamiltonian);
  const double internal = (rho * hamiltonian).trace().real();
  double passive = 0.0;
  for (int n = 0; n < 4; ++n) {
    passive += state.values[3 - n] * ham.values[n];
  }
  return internal - passive;
}

WorkReport work_report(const DensityMatrix& rho, const CoupledQubitSystem& system) {
  WorkReport report;
  report.internal_energy = internal_energy(rho, system);
  const DensityMatrix passive = passive_state(rho, system);
  report.passive_energy = internal_energy(passive, system);
  report.ergotropy = report.internal_energy - report.passive_energy;
  report.populations_sorted = passive.populations();
  report.energies = system.energies;
  return report;
}

}  // namespace qsteady
