#pragma once

#include "qsteady/system.hpp"

namespace qsteady {

enum class Statistics { Boson, Fermion };

/// One local reservoir: statistics, temperature, chemical potential and
/// the flat spectral-density value J. The chemical potential of a boson
/// reservoir is structurally zero (particle number is not conserved), so
/// the boson factory does not take one.
struct ReservoirSpec {
  Statistics kind = Statistics::Boson;
  double temperature = 1.0;       ///< > 0
  double mu = 0.0;                ///< chemical potential; 0 for bosons
  double spectral_density = 1.0;  ///< flat J > 0

  static ReservoirSpec boson(double temperature, double spectral_density);
  static ReservoirSpec fermion(double temperature, double mu, double spectral_density);

  friend bool operator==(const ReservoirSpec&, const ReservoirSpec&) = default;
};

/// Mean occupation N(omega): Bose-Einstein for bosons (omega must be
/// positive or the occupation diverges; std::domain_error otherwise),
/// Fermi-Dirac for fermions. At very low temperature the boson occupation
/// underflows to exactly zero, which is the intended limit.
double occupation(const ReservoirSpec& spec, double omega);

/// Absorption (gamma) and emission (Gamma) rates of one reservoir at the
/// two transition frequencies (freq_sum -+ rabi)/2. Emission is derived
/// from absorption so that Gamma - gamma = J (boson) and gamma + Gamma = J
/// (fermion) hold without extra rounding.
struct RateSet {
  double absorption_lower = 0;  ///< gamma at (freq_sum - rabi)/2
  double absorption_upper = 0;  ///< gamma at (freq_sum + rabi)/2
  double emission_lower = 0;    ///< Gamma at (freq_sum - rabi)/2
  double emission_upper = 0;    ///< Gamma at (freq_sum + rabi)/2
};

RateSet transition_rates(const ReservoirSpec& spec, const CoupledQubitSystem& system);

}  // namespace qsteady
