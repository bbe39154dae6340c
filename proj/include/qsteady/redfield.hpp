#pragma once

#include "qsteady/density.hpp"
#include "qsteady/reservoir.hpp"

namespace qsteady {

/// Jump operators of the two reservoirs in the energy basis. a1/a2 lower
/// the system by the lower transition frequency (freq_sum - rabi)/2,
/// b1/b2 by the upper one. Each has exactly two nonzero entries whose
/// magnitude is sin(theta/2) or cos(theta/2).
struct SystemOperators {
  Matrix4 a1, b1, a2, b2;
};

SystemOperators build_system_operators(const CoupledQubitSystem& system);

/// Full generator of the master equation as a 16x16 matrix acting on
/// column-stacked density matrices (energy basis). Contains the coherent
/// term plus the same-frequency dissipators; the cross-frequency
/// dissipators are included unless `secular` is set.
struct Liouvillian {
  Matrix16 matrix = Matrix16::Zero();
  CoupledQubitSystem system{};
  ReservoirSpec reservoir1{}, reservoir2{};
  bool secular = false;

  Matrix4 apply(const Matrix4& rho) const { return unvec(matrix * vec(rho)); }
};

Liouvillian build_generator(const CoupledQubitSystem& system, const ReservoirSpec& r1,
                            const ReservoirSpec& r2, bool secular = false);

/// Steady state via singular-value decomposition of the generator.
/// Requires a one-dimensional null space (exactly one singular value at or
/// below 1e-10 times the largest); throws std::runtime_error carrying the
/// singular-value gap otherwise. The null vector is rephased, Hermitized
/// and trace-normalized.
DensityMatrix steady_state_nullspace(const Liouvillian& generator);

/// Norm of generator * vec(rho); zero for an exact steady state.
double stationarity_residual(const Liouvillian& generator, const DensityMatrix& rho);

/// Classical fixed-step fourth-order integration of the linear master
/// equation from `rho0` (energy basis) to t_final. Guards dt*|L| <= 0.1
/// and aborts with diagnostics if the trace drifts beyond 1e-6.
DensityMatrix evolve(const Liouvillian& generator, const DensityMatrix& rho0,
                     double t_final, double dt);

}  // namespace qsteady
