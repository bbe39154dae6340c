#include "qsteady/redfield.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qsteady {

SystemOperators build_system_operators(const CoupledQubitSystem& system) {
  const double c = std::sqrt((1.0 + system.cos_mixing) / 2.0);  // cos(theta/2)
  const double s = std::sqrt((1.0 - system.cos_mixing) / 2.0);  // sin(theta/2)
  auto dyad = [](int i, int j) {
    Matrix4 m = Matrix4::Zero();
    m(i, j) = 1.0;
    return m;
  };
  SystemOperators ops;
  ops.a1 = s * (dyad(2, 3) - dyad(0, 1));
  ops.b1 = c * (dyad(1, 3) + dyad(0, 2));
  ops.a2 = c * (dyad(2, 3) + dyad(0, 1));
  ops.b2 = s * (dyad(0, 2) - dyad(1, 3));
  return ops;
}

namespace {

// Same-frequency dissipator of one reservoir: absorption raises through
// the adjoint operators, emission lowers through the operators themselves.
Matrix16 same_frequency_dissipator(const Matrix4& a, const Matrix4& b, const RateSet& r) {
  const Matrix4 ad = a.adjoint();
  const Matrix4 bd = b.adjoint();
  Matrix16 d = Matrix16::Zero();
  d += r.absorption_upper *
       (2.0 * sandwich_op(bd, b) - left_op(b * bd) - right_op(b * bd));
  d += r.absorption_lower *
       (2.0 * sandwich_op(ad, a) - left_op(a * ad) - right_op(a * ad));
  d += r.emission_upper * (2.0 * sandwich_op(b, bd) - left_op(bd * b) - right_op(bd * b));
  d += r.emission_lower * (2.0 * sandwich_op(a, ad) - left_op(ad * a) - right_op(ad * a));
  return d;
}

// Cross-frequency dissipator of one reservoir; dropped under the secular
// truncation. Couples the middle-pair coherence to the populations.
Matrix16 cross_frequency_dissipator(const Matrix4& a, const Matrix4& b, const RateSet& r) {
  const Matrix4 ad = a.adjoint();
  const Matrix4 bd = b.adjoint();
  const Matrix16 raise_pair = sandwich_op(ad, b) + sandwich_op(bd, a);
  const Matrix16 lower_pair = sandwich_op(a, bd) + sandwich_op(b, ad);
  Matrix16 d = Matrix16::Zero();
  d += r.absorption_upper * (raise_pair - left_op(a * bd) - right_op(b * ad));
  d += r.absorption_lower * (raise_pair - left_op(b * ad) - right_op(a * bd));
  d += r.emission_upper * (lower_pair - left_op(ad * b) - right_op(bd * a));
  d += r.emission_lower * (lower_pair - left_op(bd * a) - right_op(ad * b));
  return d;
}

}  // namespace

Liouvillian build_generator(const CoupledQubitSystem& system, const ReservoirSpec& r1,
                            const ReservoirSpec& r2, bool secular) {
  const SystemOperators ops = build_system_operators(system);
  const RateSet rates1 = transition_rates(r1, system);
  const RateSet rates2 = transition_rates(r2, system);

  Liouvillian lv;
  lv.system = system;
  lv.reservoir1 = r1;
  lv.reservoir2 = r2;
  lv.secular = secular;

  const Matrix4 h = system.hamiltonian(Basis::Energy);
  lv.matrix = Complex(0.0, -1.0) * (left_op(h) - right_op(h));
  lv.matrix += same_frequency_dissipator(ops.a1, ops.b1, rates1);
  lv.matrix += same_frequency_dissipator(ops.a2, ops.b2, rates2);
  if (!secular) {
    lv.matrix += cross_frequency_dissipator(ops.a1, ops.b1, rates1);
    lv.matrix += cross_frequency_dissipator(ops.a2, ops.b2, rates2);
  }
  return lv;
}

DensityMatrix steady_state_nullspace(const Liouvillian& generator) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(generator.matrix, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double largest = sv(0);
  const double null_gate = 1e-10 * largest;
  if (!(sv(15) <= null_gate) || sv(14) <= null_gate) {
    std::ostringstream msg;
    msg << "steady_state_nullspace: null space is not one-dimensional"
        << " (sigma_14 = " << sv(14) << ", sigma_15 = " << sv(15)
        << ", largest = " << largest << ")";
    throw std::runtime_error(msg.str());
  }

  Vector16 null_vec = svd.matrixV().col(15);
  // Rotate the arbitrary global phase so the trace is real and positive
  // before Hermitizing, otherwise the symmetrization could cancel it.
  Matrix4 rho = unvec(null_vec);
  const Complex tr = rho.trace();
  if (std::abs(tr) < 1e-12) {
    throw std::runtime_error("steady_state_nullspace: null vector is traceless");
  }
  rho *= std::conj(tr) / std::abs(tr);
  rho = ((rho + rho.adjoint()) / 2.0).eval();
  rho /= rho.trace().real();
  return DensityMatrix::make(rho, Basis::Energy);
}

double stationarity_residual(const Liouvillian& generator, const DensityMatrix& rho) {
  return (generator.matrix * vec(rho.entries)).norm();
}

DensityMatrix evolve(const Liouvillian& generator, const DensityMatrix& rho0,
                     double t_final, double dt) {
  rho0.require_valid();
  if (rho0.basis != Basis::Energy) {
    throw std::invalid_argument("evolve: initial state must be given in the energy basis");
  }
  if (!(dt > 0.0) || !(t_final >= 0.0)) {
    throw std::invalid_argument("evolve: need dt > 0 and t_final >= 0");
  }
  // Frobenius norm bounds the spectral norm, so this guard is conservative.
  const double gen_norm = generator.matrix.norm();
  if (dt * gen_norm > 0.1) {
    throw std::invalid_argument("evolve: dt too large; stability guard dt*|L| <= 0.1");
  }

  const long full_steps = static_cast<long>(std::floor(t_final / dt + 1e-12));
  const double remainder = t_final - static_cast<double>(full_steps) * dt;

  Vector16 y = vec(rho0.entries);
  auto rk4_step = [&generator](Vector16& state, double h) {
    const Vector16 k1 = generator.matrix * state;
    const Vector16 k2 = generator.matrix * (state + (h / 2.0) * k1).eval();
    const Vector16 k3 = generator.matrix * (state + (h / 2.0) * k2).eval();
    const Vector16 k4 = generator.matrix * (state + h * k3).eval();
    state += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  };
  auto trace_of = [](const Vector16& state) {
    return state(0) + state(5) + state(10) + state(15);
  };

  for (long step = 0; step < full_steps; ++step) {
    rk4_step(y, dt);
    const double drift = std::abs(trace_of(y) - Complex(1.0, 0.0));
    if (drift > 1e-6) {
      std::ostringstream msg;
      msg << "evolve: integration unstable; trace drift " << drift << " at step " << step
          << " (t = " << (static_cast<double>(step) + 1.0) * dt << ", dt = " << dt << ")";
      throw std::runtime_error(msg.str());
    }
  }
  if (remainder > 1e-15) {
    rk4_step(y, remainder);
  }

  Matrix4 rho = unvec(y);
  rho = ((rho + rho.adjoint()) / 2.0).eval();
  return DensityMatrix::make(rho, Basis::Energy);
}

}  // namespace qsteady
