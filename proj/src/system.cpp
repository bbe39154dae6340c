#include "qsteady/system.hpp"

#include <cmath>
#include <stdexcept>

namespace qsteady {

void SystemParams::validate() const {
  if (!(omega1 > 0.0) || !(omega2 > 0.0)) {
    throw std::invalid_argument("SystemParams: transition frequencies must be positive");
  }
  if (!(coupling >= 0.0)) {
    throw std::invalid_argument("SystemParams: coupling must be nonnegative");
  }
  if (!(coupling < 2.0 * std::sqrt(omega1 * omega2))) {
    throw std::invalid_argument(
        "SystemParams: coupling too strong; requires coupling < 2*sqrt(omega1*omega2)");
  }
}

Matrix4 standard_hamiltonian(const SystemParams& params) {
  Matrix4 h = Matrix4::Zero();
  h(0, 0) = params.omega1 + params.omega2;  // |ee>
  h(1, 1) = params.omega1;                  // |eg>
  h(2, 2) = params.omega2;                  // |ge>
  h(1, 2) = params.coupling / 2.0;
  h(2, 1) = params.coupling / 2.0;
  return h;  // |gg> at zero
}

CoupledQubitSystem diagonalize_coupled_qubits(const SystemParams& params) {
  params.validate();
  CoupledQubitSystem sys;
  sys.params = params;
  sys.freq_sum = params.omega1 + params.omega2;
  sys.detuning = params.omega1 - params.omega2;
  sys.rabi = std::hypot(sys.detuning, params.coupling);
  if (sys.rabi > 0.0) {
    sys.mixing_angle = std::atan2(params.coupling, sys.detuning);
    sys.cos_mixing = sys.detuning / sys.rabi;
    sys.sin_mixing = params.coupling / sys.rabi;
  } else {
    // Equal frequencies with zero coupling: the single-excitation block is
    // proportional to the identity; keep the symmetric convention.
    sys.mixing_angle = M_PI / 2.0;
    sys.cos_mixing = 0.0;
    sys.sin_mixing = 1.0;
  }
  sys.energies = {0.0, (sys.freq_sum - sys.rabi) / 2.0, (sys.freq_sum + sys.rabi) / 2.0,
                  sys.freq_sum};

  const double c = std::sqrt((1.0 + sys.cos_mixing) / 2.0);  // cos(theta/2)
  const double s = std::sqrt((1.0 - sys.cos_mixing) / 2.0);  // sin(theta/2)
  Matrix4 u = Matrix4::Zero();
  u(3, 0) = 1.0;  // ground state is |gg>
  u(1, 1) = -s;   // -sin(theta/2)|eg> + cos(theta/2)|ge>
  u(2, 1) = c;
  u(1, 2) = c;  // cos(theta/2)|eg> + sin(theta/2)|ge>
  u(2, 2) = s;
  u(0, 3) = 1.0;  // top state is |ee>
  sys.basis_unitary = u;
  return sys;
}

Matrix4 CoupledQubitSystem::hamiltonian(Basis basis) const {
  if (basis == Basis::Standard) {
    return standard_hamiltonian(params);
  }
  Matrix4 h = Matrix4::Zero();
  for (int i = 0; i < 4; ++i) {
    h(i, i) = energies[i];
  }
  return h;
}

}  // namespace qsteady
