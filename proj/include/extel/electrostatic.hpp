#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extel/config.hpp"

namespace extel {

/// Electron, presumed photon and external electrostatic potential at one point.
struct InteractionSystem {
  double rho0 = 0.0;
  double sigma0 = 0.0;
  std::array<double, 3> velocity{};
  double rho_photon = 0.0;
  double phi_ext = 0.0;

  double speed_squared() const noexcept;
};

/// Throws DomainError if rho0 < 0 or rho_photon < 0.
void validate(const InteractionSystem& system);

/// L = rho0 xdot^2 + rho_ph c^2 - sigma0 phi_ext
double lagrange_density(const InteractionSystem& system, const PhysicalConfig& config);

struct HamiltonianResult {
  /// First-order value, sigma0 * phi_ext.
  double H = 0.0;
  /// Full Legendre transform dL/dxdot * xdot - L.
  double legendre = 0.0;
  /// rho0 xdot^2 - rho_ph c^2: the kinetic and photon terms that are dropped.
  /// Zero exactly when the photon density balances the acquired kinetic energy.
  double cancellation_residual = 0.0;
  /// The result only holds to first order in the Taylor expansion.
  bool first_order_only = true;
};

HamiltonianResult hamiltonian_first_order(const InteractionSystem& system,
                                          const PhysicalConfig& config);

struct InteractionHamiltonian {
  /// H_w = H - H0 = -rho0 xdot^2
  double H_w = 0.0;
  /// Photon density that carries the acquired kinetic energy, rho0 xdot^2 / c^2.
  double rho_photon_required = 0.0;
};

InteractionHamiltonian interaction_hamiltonian(double rho0, std::span<const double> velocity,
                                               const PhysicalConfig& config);

struct AccelerationStep {
  double phi_step = 0.0;
  double delta_kinetic = 0.0;
  /// Measured photon energy. When absent the step is assumed to emit exactly
  /// what the balance requires.
  std::optional<double> photon_energy;
};

struct StepAudit {
  std::size_t index = 0;
  double phi_step = 0.0;
  double delta_kinetic = 0.0;
  double required_emission = 0.0;
  double emitted = 0.0;
  double relative_error = 0.0;
  bool balanced = true;
};

struct BalanceReport {
  std::vector<StepAudit> steps;
  std::size_t filtered_null_steps = 0;
  double total_phi_step = 0.0;
  double total_kinetic = 0.0;
  double total_emitted = 0.0;
  double tolerance = 0.0;
  bool balanced = true;
  std::vector<std::size_t> violations;
};

/// Checks that every step emits as much photon energy as it gains in kinetic
/// energy, and that the running totals agree. Steps without phi change,
/// kinetic change or photon are dropped as null steps. Throws DomainError on
/// an empty history.
BalanceReport energy_balance_audit(std::span<const AccelerationStep> history,
                                   double relative_tolerance = 1e-12);

}  // namespace extel
