#include "qsteady/steady_analytic.hpp"

#include <stdexcept>

namespace qsteady {

namespace {

void require_common_j(const ReservoirSpec& r1, const ReservoirSpec& r2) {
  if (r1.spectral_density != r2.spectral_density) {
    throw std::invalid_argument(
        "steady_analytic: closed forms require equal spectral densities J1 == J2");
  }
}

void require_positive_coupling(const CoupledQubitSystem& system) {
  if (!(system.params.coupling > 0.0)) {
    throw std::invalid_argument(
        "steady_analytic: closed forms require coupling > 0 (nondegenerate middle pair)");
  }
}

void require_symmetric(const CoupledQubitSystem& system) {
  if (!system.symmetric()) {
    throw std::invalid_argument("steady_analytic: operation requires omega1 == omega2");
  }
}

void require_kind(const ReservoirSpec& r1, const ReservoirSpec& r2, Statistics kind) {
  if (r1.kind != kind || r2.kind != kind) {
    throw std::invalid_argument("steady_analytic: reservoir statistics do not match the operation");
  }
}

// Steady-state table shared by the symmetric and detuned boson cases.
DensityMatrix boson_closed_form(const OccupationMoments& m, double rabi_over_j) {
  const double lp = m.avg_upper;
  const double lm = m.avg_lower;
  const double mp = m.diff_upper;
  const double mm = m.diff_lower;
  const double occ = 1.0 + lp + lm;
  const double back = 1.0 / (4.0 * occ * occ + rabi_over_j * rabi_over_j);
  const double k3 = 3.0 + 2.0 * lp + 2.0 * lm;
  const double k1 = 1.0 + 2.0 * lp + 2.0 * lm;
  const double s1 = mp - mm * k3;
  const double s2 = mm - mp * k3;
  const double z1 = mp + mm * k1;
  const double z2 = mm + mp * k1;
  const double norm =
      (1.0 + 2.0 * lp) * (1.0 + 2.0 * lm) - 16.0 * mp * mm * occ * occ * back;

  Matrix4 rho = Matrix4::Zero();
  rho(0, 0) = ((1.0 + lp) * (1.0 + lm) - s1 * s2 * back) / norm;
  rho(1, 1) = (lm * (1.0 + lp) + s2 * z1 * back) / norm;
  rho(2, 2) = (lp * (1.0 + lm) + s1 * z2 * back) / norm;
  rho(3, 3) = (lp * lm - z1 * z2 * back) / norm;
  const Complex c23 =
      (mp * (1.0 + 2.0 * lm) + mm * (1.0 + 2.0 * lp)) / (Complex(2.0 * occ, rabi_over_j) * norm);
  rho(1, 2) = c23;
  rho(2, 1) = std::conj(c23);
  return DensityMatrix::make(rho, Basis::Energy);
}

// Steady-state table shared by the symmetric and detuned fermion cases.
// Unit trace holds identically: the coherence-backaction corrections cancel
// in pairs.
DensityMatrix fermion_closed_form(const OccupationMoments& m, double rabi_over_j) {
  const double lp = m.avg_upper;
  const double lm = m.avg_lower;
  const double msum = m.diff_upper + m.diff_lower;
  const double back = msum * msum / (4.0 + rabi_over_j * rabi_over_j);

  Matrix4 rho = Matrix4::Zero();
  rho(0, 0) = (1.0 - lp) * (1.0 - lm) - back;
  rho(1, 1) = lm * (1.0 - lp) + back;
  rho(2, 2) = lp * (1.0 - lm) + back;
  rho(3, 3) = lp * lm - back;
  const Complex c23 = -msum / Complex(2.0, rabi_over_j);
  rho(1, 2) = c23;
  rho(2, 1) = std::conj(c23);
  return DensityMatrix::make(rho, Basis::Energy);
}

}  // namespace

OccupationMoments occupation_moments(const CoupledQubitSystem& system,
                                     const ReservoirSpec& r1, const ReservoirSpec& r2) {
  const double lower = (system.freq_sum - system.rabi) / 2.0;
  const double upper = (system.freq_sum + system.rabi) / 2.0;
  const double n1u = occupation(r1, upper);
  const double n2u = occupation(r2, upper);
  const double n1l = occupation(r1, lower);
  const double n2l = occupation(r2, lower);
  return {(n1u + n2u) / 2.0, (n1l + n2l) / 2.0, (n1u - n2u) / 2.0, (n1l - n2l) / 2.0};
}

OccupationMoments effective_moments(const OccupationMoments& m, double cos_mixing,
                                    double sin_mixing) {
  return {m.avg_upper + m.diff_upper * cos_mixing, m.avg_lower - m.diff_lower * cos_mixing,
          m.diff_upper * sin_mixing, m.diff_lower * sin_mixing};
}

DensityMatrix equilibrium_steady_state(const CoupledQubitSystem& system,
                                       const ReservoirSpec& r1, const ReservoirSpec& r2,
                                       OrderingMode mode) {
  if (!(r1 == r2)) {
    throw std::invalid_argument("equilibrium_steady_state: reservoirs must be identical");
  }
  require_symmetric(system);
  require_positive_coupling(system);

  const RateSet k1 = transition_rates(r1, system);
  const RateSet k2 = transition_rates(r2, system);
  const double gp = k1.absorption_upper + k2.absorption_upper;
  const double gm = k1.absorption_lower + k2.absorption_lower;
  const double ep = k1.emission_upper + k2.emission_upper;
  const double em = k1.emission_lower + k2.emission_lower;
  const double z = (gm + em) * (gp + ep);

  std::array<double, 4> p{};
  if (mode == OrderingMode::Physical) {
    // Detailed-balance attachment: ground state collects both emission
    // factors; each middle state the absorption factor of its own branch.
    p = {em * ep / z, gm * ep / z, gp * em / z, gp * gm / z};
  } else {
    // Table indices kept as printed; population-inverted at low T.
    p = {ep * gm / z, gm * gp / z, em * gp / z, em * ep / z};
  }
  return diagonal_state(p, Basis::Energy);
}

DensityMatrix noneq_boson_steady_state(const CoupledQubitSystem& system,
                                       const ReservoirSpec& r1, const ReservoirSpec& r2,
                                       OrderingMode /*mode*/) {
  // The non-equilibrium table is already detailed-balance consistent, so
  // both ordering modes produce the same state.
  require_kind(r1, r2, Statistics::Boson);
  require_symmetric(system);
  require_positive_coupling(system);
  require_common_j(r1, r2);
  const OccupationMoments m = occupation_moments(system, r1, r2);
  return boson_closed_form(m, system.rabi / r1.spectral_density);
}

DensityMatrix noneq_fermion_steady_state(const CoupledQubitSystem& system,
                                         const ReservoirSpec& r1, const ReservoirSpec& r2,
                                         OrderingMode /*mode*/) {
  require_kind(r1, r2, Statistics::Fermion);
  if (r1.temperature != r2.temperature) {
    throw std::invalid_argument(
        "noneq_fermion_steady_state: closed form holds for equal temperatures");
  }
  require_symmetric(system);
  require_positive_coupling(system);
  require_common_j(r1, r2);
  const OccupationMoments m = occupation_moments(system, r1, r2);
  return fermion_closed_form(m, system.rabi / r1.spectral_density);
}

DensityMatrix asymmetric_steady_state(const CoupledQubitSystem& system,
                                      const ReservoirSpec& r1, const ReservoirSpec& r2,
                                      OrderingMode /*mode*/) {
  if (r1.kind != r2.kind) {
    throw std::invalid_argument("asymmetric_steady_state: mixed statistics are not supported");
  }
  if (r1.kind == Statistics::Fermion && r1.temperature != r2.temperature) {
    throw std::invalid_argument(
        "asymmetric_steady_state: fermion closed form holds for equal temperatures");
  }
  require_positive_coupling(system);
  require_common_j(r1, r2);
  const OccupationMoments m = effective_moments(occupation_moments(system, r1, r2),
                                                system.cos_mixing, system.sin_mixing);
  const double x = system.rabi / r1.spectral_density;
  if (r1.kind == Statistics::Boson) {
    return boson_closed_form(m, x);
  }
  return fermion_closed_form(m, x);
}

}  // namespace qsteady
