#pragma once

#include "qsteady/density.hpp"
#include "qsteady/reservoir.hpp"

namespace qsteady {

/// How closed-form population tables are attached to eigenstate indices.
///
/// The equilibrium population table admits two readings. `Physical`
/// attaches each population product to the eigenstate whose
/// detailed-balance weight it carries, which reproduces the (grand-)
/// canonical state and agrees with the numerical generator.
/// `PaperLiteral` keeps table index k on the k-th eigenstate (ascending),
/// which yields a population-inverted state at low temperature. The
/// non-equilibrium tables are already detailed-balance consistent, so
/// both modes coincide there.
enum class OrderingMode { Physical, PaperLiteral };

/// Occupation moments of the reservoir pair at the two transition
/// frequencies: averages (N1+N2)/2 and half-differences (N1-N2)/2. The
/// half-differences vanish identically for identical reservoirs.
struct OccupationMoments {
  double avg_upper = 0;
  double avg_lower = 0;
  double diff_upper = 0;
  double diff_lower = 0;
};

OccupationMoments occupation_moments(const CoupledQubitSystem& system,
                                     const ReservoirSpec& r1, const ReservoirSpec& r2);

/// Mixing-angle-weighted moments used for detuned qubits:
/// avg -> avg +- diff*cos(theta) (sign tied to the frequency branch),
/// diff -> diff*sin(theta). Reduces to the identity when cos_mixing = 0.
OccupationMoments effective_moments(const OccupationMoments& m, double cos_mixing,
                                    double sin_mixing);

/// Closed-form steady state for identical reservoirs on symmetric qubits.
/// Diagonal in the energy basis; `Physical` mode yields exactly the
/// (grand-)canonical Gibbs state.
DensityMatrix equilibrium_steady_state(const CoupledQubitSystem& system,
                                       const ReservoirSpec& r1, const ReservoirSpec& r2,
                                       OrderingMode mode);

/// Closed-form steady state for symmetric qubits between two boson
/// reservoirs at (possibly) different temperatures. Only the (2,3)
/// coherence is nonzero off the diagonal.
DensityMatrix noneq_boson_steady_state(const CoupledQubitSystem& system,
                                       const ReservoirSpec& r1, const ReservoirSpec& r2,
                                       OrderingMode mode);

/// Closed-form steady state for symmetric qubits between two fermion
/// reservoirs at equal temperature and (possibly) different chemical
/// potentials.
DensityMatrix noneq_fermion_steady_state(const CoupledQubitSystem& system,
                                         const ReservoirSpec& r1, const ReservoirSpec& r2,
                                         OrderingMode mode);

/// Detuned-qubit generalization: substitutes the mixing-angle-weighted
/// moments into the matching symmetric table. Reduces exactly to the
/// symmetric operations at zero detuning.
DensityMatrix asymmetric_steady_state(const CoupledQubitSystem& system,
                                      const ReservoirSpec& r1, const ReservoirSpec& r2,
                                      OrderingMode mode);

}  // namespace qsteady
