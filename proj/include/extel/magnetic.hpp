#pragma once

#include <span>
#include <vector>

#include "extel/config.hpp"
#include "extel/intrinsic_wave.hpp"

namespace extel {

/// phi_em = 0.5 (E^2 / u^2 + B^2). Throws DomainError for u == 0.
double field_energy_density(double E, double B, double u);

struct MagneticScenario {
  ParticleState state;
  /// Intrinsic field-energy density before the external field is applied.
  double phi_em = 0.0;
  double B_ext = 0.0;
  /// Angle between intrinsic and external field, radians in [0, pi].
  double theta = 0.0;
  /// Path length inside the field region.
  double path_length = 0.0;
  /// Length of the switch-on interval [0, tau]. Carried along, enters no result.
  double switch_on = 0.0;
};

/// Throws DomainError if B_ext < 0, path_length < 0 or theta outside [0, pi].
void validate(const MagneticScenario& scenario);

/// Scenario whose phi_em is the peak intrinsic field-energy density of `state`.
MagneticScenario make_scenario(const ParticleState& state, double B_ext, double theta,
                               double path_length, const PhysicalConfig& config,
                               double switch_on = 0.0);

/// phi(B_ext) = phi_em + |B_ext|^2. theta does not enter.
double apply_external_field(const MagneticScenario& scenario);

struct DiscrepancyPoint {
  double theta = 0.0;
  double value = 0.0;
};

/// Delta(theta) = phi(B_ext) - (-mu B_ext cos theta) on `samples` angles
/// spanning [0, pi]. The scenario's own theta is ignored.
std::vector<DiscrepancyPoint> scalar_product_discrepancy(const MagneticScenario& scenario,
                                                         double mu, std::size_t samples = 101);

struct PhaseResult {
  /// Reduced phase in [0, 2 pi).
  double alpha = 0.0;
  /// Windings removed, floor(raw / 2 pi).
  long long n = 0;
  /// 2 pi (l / lambda) B_ext / sqrt(rho_bar u^2)
  double raw = 0.0;
};

/// Reduces a raw phase. alpha + 2 pi n reproduces raw exactly.
PhaseResult reduce_phase(double raw);

PhaseResult phase_difference(const MagneticScenario& scenario, const PhysicalConfig& config);

/// Same as phase_difference with the geometry passed explicitly.
PhaseResult phase_difference(double path_length, double wavelength, double u, double rho_bar,
                             double B_ext);

struct PhaseSweepRow {
  double B_ext = 0.0;
  PhaseResult phase;
};

struct PhaseSweep {
  std::vector<PhaseSweepRow> rows;
  /// 2 pi l / (lambda sqrt(rho_bar u^2))
  double analytic_slope = 0.0;
};

/// Raw phase at each B value, in input order. Needs >= 2 distinct B values.
PhaseSweep phase_sweep(double path_length, double wavelength, double u, double rho_bar,
                       std::span<const double> B_values);

}  // namespace extel
