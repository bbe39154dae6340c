#include "qsteady/reservoir.hpp"

#include <cmath>
#include <stdexcept>

namespace qsteady {

namespace {
void check_common(double temperature, double spectral_density) {
  if (!(temperature > 0.0)) {
    throw std::invalid_argument("ReservoirSpec: temperature must be positive");
  }
  if (!(spectral_density > 0.0)) {
    throw std::invalid_argument("ReservoirSpec: spectral density must be positive");
  }
}
}  // namespace

ReservoirSpec ReservoirSpec::boson(double temperature, double spectral_density) {
  check_common(temperature, spectral_density);
  return {Statistics::Boson, temperature, 0.0, spectral_density};
}

ReservoirSpec ReservoirSpec::fermion(double temperature, double mu,
                                     double spectral_density) {
  check_common(temperature, spectral_density);
  return {Statistics::Fermion, temperature, mu, spectral_density};
}

double occupation(const ReservoirSpec& spec, double omega) {
  if (spec.kind == Statistics::Boson) {
    if (!(omega > 0.0)) {
      throw std::domain_error("occupation: boson occupation requires omega > 0");
    }
    // expm1 keeps small omega/T accurate; overflow gives +inf and N = 0.
    return 1.0 / std::expm1(omega / spec.temperature);
  }
  return 1.0 / (std::exp((omega - spec.mu) / spec.temperature) + 1.0);
}

RateSet transition_rates(const ReservoirSpec& spec, const CoupledQubitSystem& system) {
  const double lower = (system.freq_sum - system.rabi) / 2.0;
  const double upper = (system.freq_sum + system.rabi) / 2.0;
  const double j = spec.spectral_density;
  RateSet rates;
  rates.absorption_lower = j * occupation(spec, lower);
  rates.absorption_upper = j * occupation(spec, upper);
  if (spec.kind == Statistics::Boson) {
    rates.emission_lower = rates.absorption_lower + j;  // Gamma = J*(N+1)
    rates.emission_upper = rates.absorption_upper + j;
  } else {
    rates.emission_lower = j - rates.absorption_lower;  // Gamma = J*(1-N)
    rates.emission_upper = j - rates.absorption_upper;
  }
  return rates;
}

}  // namespace qsteady
