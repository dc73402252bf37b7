#pragma once

#include <array>
#include <string_view>

#include "extel/config.hpp"

namespace extel {

enum class ParticleKind { electron, photon };

std::string_view to_string(ParticleKind kind);
/// "electron" or "photon"; throws DomainError otherwise.
ParticleKind parse_particle_kind(std::string_view name);

/// One member of an ensemble: a monochromatic plane wave with intrinsic mass
/// density. Built by make_particle, which enforces hbar*omega = m*u^2,
/// omega = k*u and lambda*k = 2*pi.
struct ParticleState {
  ParticleKind kind = ParticleKind::electron;
  double mass = 1.0;
  double u = 1.0;
  double omega = 1.0;
  double wavelength = 1.0;
  double k = 1.0;
  /// Peak of rho(x, t) = rho0 * cos^2(k x - omega t); rho0 = 2 m / V.
  double rho0 = 2.0;
  double volume = 1.0;
};

/// Photons are pinned to u = c after the range check. Throws DomainError for
/// u <= 0, u > c or volume <= 0.
ParticleState make_particle(ParticleKind kind, double u, const PhysicalConfig& config,
                            double volume = 1.0);

struct EnergyPartition {
  double kinetic = 0.0;
  double potential = 0.0;
  double total = 0.0;
};

/// W_kin = W_pot = m u^2 / 2, W_tot = m u^2.
EnergyPartition energy_partition(const ParticleState& state);

/// Geometry: propagation along x, E along y, B along z.
struct FieldSample {
  double rho = 0.0;
  /// Longitudinal momentum density rho*u (x component).
  std::array<double, 3> momentum{};
  std::array<double, 3> E{};
  std::array<double, 3> B{};
  /// Intrinsic potential: field-energy density, 0.5*rho0*u^2*sin^2(kx - wt).
  double phi = 0.0;
  /// Mass-borne energy density 0.5*rho*u^2.
  double mass_energy = 0.0;

  double total_energy() const noexcept { return mass_energy + phi; }
};

/// Intrinsic fields of the plane wave at (x, t). Mass energy and field energy
/// oscillate in antiphase; their sum is constant along x.
FieldSample sample_intrinsic_fields(const ParticleState& state, double x, double t,
                                    const PhysicalConfig& config);

/// Transverse component of the moment-bearing field
/// B_s = -(1 / 2 sigma_bar) curl(rho u). In the 1+1 reduction it is
/// -(1 / 2 sigma_bar) d(rho u)/dx, which oscillates with period lambda / 2.
double moment_field(const ParticleState& state, double x, double t, const PhysicalConfig& config);

/// Energy of the particle volume: (V / lambda) * integral over one wavelength
/// of the given density component, by periodic trapezoid quadrature.
struct IntrinsicEnergy {
  double mass_term = 0.0;
  double field_term = 0.0;
  double total() const noexcept { return mass_term + field_term; }
};
IntrinsicEnergy integrate_intrinsic_energy(const ParticleState& state,
                                           const PhysicalConfig& config,
                                           std::size_t samples = 256);

struct SpinParameters {
  double g = 0.0;
  /// Spin magnitude in the units of hbar carried by the config.
  double s = 0.0;
  /// Unit vector of the intrinsic moment field at its positive peak.
  std::array<double, 3> direction{0.0, 0.0, 1.0};
  /// g (e / 2m) s |B_s| - hbar*omega/2, relative to hbar*omega/2.
  double relative_residual = 0.0;
};

/// Solves W = mu*B = hbar*omega/2 with mu = g (e/2m) s on the plane-wave state.
/// The peak of moment_field fixes the product g*s; the spin itself is the
/// angular momentum W_em / omega of the electromagnetic share of the energy
/// (field term for electrons, the whole energy for photons). g carries a
/// factor sigma_bar / e, so the closed values need sigma_bar = e.
SpinParameters spin_parameters(ParticleKind kind, const PhysicalConfig& config);

/// Signed spin s * B_s(x, 0) / max|B_s|. Period lambda / 2, range [-s, s].
double spin_orientation(const ParticleState& state, double x, const PhysicalConfig& config);

struct EprReport {
  bool resolvable = false;
  double window = 0.0;
  double half_wavelength = 0.0;
  double min_windowed_spin = 0.0;
  double max_windowed_spin = 0.0;
};

/// Boxcar-averages spin_orientation over windows of length `window` centred on
/// `centers` equally spaced points covering one spin period, and reports the
/// range of the averages. resolvable iff window < lambda / 2.
EprReport epr_precision_check(const ParticleState& state, double window,
                              const PhysicalConfig& config, std::size_t centers = 512);

enum class DerivativeMode { central_difference, analytic };

struct FieldResidual {
  /// max |(1/u^2) dE/dt - (curl B)_y|
  double ampere = 0.0;
  /// max |dB/dt + (curl E)_z|
  double faraday = 0.0;
  double spacing = 0.0;

  double max() const noexcept { return ampere > faraday ? ampere : faraday; }
};

/// Residuals of the intrinsic field equations over one wavelength on a grid of
/// spacing h (time step h / 2u). Throws DomainError if h <= 0 or h > lambda/16.
FieldResidual verify_field_equations(const ParticleState& state, double h,
                                     const PhysicalConfig& config,
                                     DerivativeMode mode = DerivativeMode::central_difference);

}  // namespace extel
