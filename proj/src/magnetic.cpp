#include "extel/magnetic.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include "extel/errors.hpp"
#include "extel/numerics.hpp"

namespace extel {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

void check_phase_inputs(double path_length, double wavelength, double u, double rho_bar,
                        double B_ext) {
  if (!(wavelength > 0.0)) throw DomainError("wavelength must be > 0, got " + format_double(wavelength));
  if (!(u > 0.0)) throw DomainError("speed must be > 0, got " + format_double(u));
  if (!(rho_bar > 0.0)) throw DomainError("rho_bar must be > 0, got " + format_double(rho_bar));
  if (!(path_length >= 0.0)) throw DomainError("path length must be >= 0");
  if (!(B_ext >= 0.0)) throw DomainError("B_ext must be >= 0, got " + format_double(B_ext));
}

}  // namespace

double field_energy_density(double E, double B, double u) {
  if (u == 0.0 || !std::isfinite(u)) throw DomainError("field_energy_density: u must be nonzero");
  return 0.5 * (E * E / (u * u) + B * B);
}

void validate(const MagneticScenario& scenario) {
  if (!(scenario.B_ext >= 0.0)) {
    throw DomainError("B_ext must be >= 0, got " + format_double(scenario.B_ext));
  }
  if (!(scenario.path_length >= 0.0)) {
    throw DomainError("path length must be >= 0, got " + format_double(scenario.path_length));
  }
  if (!(scenario.theta >= 0.0 && scenario.theta <= std::numbers::pi)) {
    throw DomainError("theta must lie in [0, pi], got " + format_double(scenario.theta));
  }
}

MagneticScenario make_scenario(const ParticleState& state, double B_ext, double theta,
                               double path_length, const PhysicalConfig& config,
                               double switch_on) {
  // Field energy peaks where the mass density has its node.
  const auto peak = sample_intrinsic_fields(state, state.wavelength / 4.0, 0.0, config);
  MagneticScenario scenario{state, field_energy_density(peak.E[1], peak.B[2], state.u), B_ext,
                            theta, path_length, switch_on};
  validate(scenario);
  return scenario;
}

double apply_external_field(const MagneticScenario& scenario) {
  validate(scenario);
  return scenario.phi_em + scenario.B_ext * scenario.B_ext;
}

std::vector<DiscrepancyPoint> scalar_product_discrepancy(const MagneticScenario& scenario,
                                                         double mu, std::size_t samples) {
  if (!std::isfinite(mu)) throw DomainError("magnetic moment must be finite");
  if (samples < 2) throw DomainError("scalar_product_discrepancy: need at least 2 angles");
  const double energy = apply_external_field(scenario);
  std::vector<DiscrepancyPoint> out;
  out.reserve(samples);
  for (double theta : linspace(0.0, std::numbers::pi, samples)) {
    const double classical = -mu * scenario.B_ext * std::cos(theta);
    out.push_back({theta, energy - classical});
  }
  return out;
}

PhaseResult reduce_phase(double raw) {
  PhaseResult out;
  out.raw = raw;
  out.n = static_cast<long long>(std::floor(raw / two_pi));
  // raw and 2 pi n are within a factor of two for n >= 1, so the subtraction is exact.
  out.alpha = raw - two_pi * static_cast<double>(out.n);
  if (out.alpha >= two_pi) {
    ++out.n;
    out.alpha = raw - two_pi * static_cast<double>(out.n);
  } else if (out.alpha < 0.0) {
    --out.n;
    out.alpha = raw - two_pi * static_cast<double>(out.n);
  }
  return out;
}

PhaseResult phase_difference(double path_length, double wavelength, double u, double rho_bar,
                             double B_ext) {
  check_phase_inputs(path_length, wavelength, u, rho_bar, B_ext);
  return reduce_phase(two_pi * (path_length / wavelength) * B_ext / std::sqrt(rho_bar * u * u));
}

PhaseResult phase_difference(const MagneticScenario& scenario, const PhysicalConfig& config) {
  validate(scenario);
  return phase_difference(scenario.path_length, scenario.state.wavelength, scenario.state.u,
                          config.rho_bar(), scenario.B_ext);
}

PhaseSweep phase_sweep(double path_length, double wavelength, double u, double rho_bar,
                       std::span<const double> B_values) {
  if (std::set<double>(B_values.begin(), B_values.end()).size() < 2) {
    throw DomainError("phase_sweep: need at least two distinct B values");
  }
  check_phase_inputs(path_length, wavelength, u, rho_bar, 0.0);
  for (double B : B_values) check_phase_inputs(path_length, wavelength, u, rho_bar, B);

  PhaseSweep sweep;
  sweep.analytic_slope = two_pi * path_length / (wavelength * std::sqrt(rho_bar * u * u));
  sweep.rows.resize(B_values.size());
  const auto n = static_cast<std::ptrdiff_t>(B_values.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double B = B_values[static_cast<std::size_t>(i)];
    sweep.rows[static_cast<std::size_t>(i)] = {B, phase_difference(path_length, wavelength, u, rho_bar, B)};
  }
  return sweep;
}

}  // namespace extel
