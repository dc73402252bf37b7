#include "extel/electrostatic.hpp"

#include <algorithm>
#include <cmath>

#include "extel/errors.hpp"
#include "extel/numerics.hpp"

namespace extel {

namespace {

double relative_gap(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace

double InteractionSystem::speed_squared() const noexcept {
  return velocity[0] * velocity[0] + velocity[1] * velocity[1] + velocity[2] * velocity[2];
}

void validate(const InteractionSystem& system) {
  if (!(system.rho0 >= 0.0)) {
    throw DomainError("electron density rho0 must be >= 0, got " + format_double(system.rho0));
  }
  if (!(system.rho_photon >= 0.0)) {
    throw DomainError("photon density must be >= 0, got " + format_double(system.rho_photon));
  }
}

double lagrange_density(const InteractionSystem& system, const PhysicalConfig& config) {
  validate(system);
  const double c2 = config.c() * config.c();
  return system.rho0 * system.speed_squared() + system.rho_photon * c2 -
         system.sigma0 * system.phi_ext;
}

HamiltonianResult hamiltonian_first_order(const InteractionSystem& system,
                                          const PhysicalConfig& config) {
  validate(system);
  const double kinetic = system.rho0 * system.speed_squared();
  const double photon = system.rho_photon * config.c() * config.c();
  const double potential = system.sigma0 * system.phi_ext;

  HamiltonianResult out;
  out.H = potential;
  // dL/dxdot . xdot = 2 rho0 xdot^2
  out.legendre = 2.0 * kinetic - (kinetic + photon - potential);
  out.cancellation_residual = kinetic - photon;
  return out;
}

InteractionHamiltonian interaction_hamiltonian(double rho0, std::span<const double> velocity,
                                               const PhysicalConfig& config) {
  if (!(rho0 >= 0.0)) throw DomainError("rho0 must be >= 0, got " + format_double(rho0));
  double v2 = 0.0;
  for (double v : velocity) v2 += v * v;
  const double kinetic = rho0 * v2;
  return {-kinetic, kinetic / (config.c() * config.c())};
}

BalanceReport energy_balance_audit(std::span<const AccelerationStep> history,
                                   double relative_tolerance) {
  if (history.empty()) throw DomainError("energy_balance_audit: history is empty");
  if (!(relative_tolerance >= 0.0)) {
    throw DomainError("energy_balance_audit: tolerance must be >= 0");
  }

  BalanceReport report;
  report.tolerance = relative_tolerance;
  double scale = 0.0;
  for (std::size_t i = 0; i < history.size(); ++i) {
    const auto& step = history[i];
    if (step.phi_step == 0.0 && step.delta_kinetic == 0.0 && !step.photon_energy) {
      ++report.filtered_null_steps;
      continue;
    }
    StepAudit audit;
    audit.index = i;
    audit.phi_step = step.phi_step;
    audit.delta_kinetic = step.delta_kinetic;
    audit.required_emission = step.delta_kinetic;
    audit.emitted = step.photon_energy.value_or(audit.required_emission);
    audit.relative_error = relative_gap(audit.emitted, audit.required_emission);
    audit.balanced = audit.relative_error <= relative_tolerance;
    if (!audit.balanced) {
      report.balanced = false;
      report.violations.push_back(i);
    }
    report.total_phi_step += step.phi_step;
    report.total_kinetic += audit.delta_kinetic;
    report.total_emitted += audit.emitted;
    scale += std::max(std::abs(audit.delta_kinetic), std::abs(audit.emitted));
    report.steps.push_back(audit);
  }
  if (std::abs(report.total_kinetic - report.total_emitted) > relative_tolerance * scale) {
    report.balanced = false;
  }
  return report;
}

}  // namespace extel
