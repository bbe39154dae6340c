#pragma once

#include <array>

#include "qsteady/linalg.hpp"

namespace qsteady {

/// Basis a 4x4 operator is expressed in. Standard order is
/// (|ee>, |eg>, |ge>, |gg>); energy order is ascending in energy.
enum class Basis { Energy, Standard };

/// Bare parameters of the coupled qubit pair, in units hbar = k_B = 1.
struct SystemParams {
  double omega1;    ///< transition frequency of qubit 1, > 0
  double omega2;    ///< transition frequency of qubit 2, > 0
  double coupling;  ///< exchange strength, 0 <= coupling < 2*sqrt(omega1*omega2)

  void validate() const;  // throws std::invalid_argument on violation
};

/// The two-qubit Hamiltonian in the standard basis (ee, eg, ge, gg).
Matrix4 standard_hamiltonian(const SystemParams& params);

/// Derived eigensystem of the coupled pair. Energies are gauged so the
/// ground state sits at zero; the middle pair is split by the Rabi
/// frequency sqrt(detuning^2 + coupling^2). cos_mixing and sin_mixing are
/// computed as detuning/rabi and coupling/rabi so that the symmetric case
/// (zero detuning) has cos_mixing exactly zero.
struct CoupledQubitSystem {
  SystemParams params{};
  double freq_sum = 0;      ///< omega1 + omega2
  double detuning = 0;      ///< omega1 - omega2
  double rabi = 0;          ///< sqrt(detuning^2 + coupling^2)
  double mixing_angle = 0;  ///< in [0, pi]; pi/2 for symmetric qubits
  double cos_mixing = 0;
  double sin_mixing = 0;
  std::array<double, 4> energies{};  ///< ascending, ground at 0
  /// Columns are the energy eigenvectors expressed in the standard basis,
  /// ascending in energy; maps energy-basis coordinates to standard ones.
  Matrix4 basis_unitary = Matrix4::Identity();

  Vector4 eigenvector(int k) const { return basis_unitary.col(k); }
  Matrix4 hamiltonian(Basis basis) const;
  bool symmetric() const { return detuning == 0.0; }
};

CoupledQubitSystem diagonalize_coupled_qubits(const SystemParams& params);

}  // namespace qsteady
