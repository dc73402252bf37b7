#pragma once

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "extel/config.hpp"
#include "extel/kernels.hpp"

namespace extel {

/// psi0(k) = 1 on the support.
struct UniformProfile {};

/// psi0(k) = exp(-(q - center)^2 / (2 width^2)) with q = k / k0.
struct GaussianProfile {
  double center = 0.5;
  double width = 0.2;
};

/// Complex samples on an even grid over q = k / k0 in [0, 1], linearly
/// interpolated. Produced by interaction_free_condition.
struct TabulatedProfile {
  std::vector<std::complex<double>> values;
};

using AmplitudeProfile = std::variant<UniformProfile, GaussianProfile, TabulatedProfile>;

enum class EnsembleDimension { line, radial3d };

struct KInterval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const noexcept { return hi - lo; }
  friend bool operator==(const KInterval&, const KInterval&) = default;
};

struct PositionDomain {
  double lo = 0.0;
  double hi = 1.0;
};

/// k-space amplitude of a free-electron ensemble with cutoff k0 = sqrt(m E_T)/hbar.
///
/// Values, not handles: every operation returns a new ensemble. The profile is
/// a function of k / k0, so changing E_T rescales it onto the new range.
struct QuantumEnsemble {
  AmplitudeProfile profile = UniformProfile{};
  /// Disjoint, sorted intervals inside [0, k0]. A zero-width interval is a
  /// single allowed wavenumber.
  std::vector<KInterval> support;
  double k0 = 1.0;
  double total_energy = 1.0;
  EnsembleDimension dim = EnsembleDimension::line;
  /// Global scale applied to the profile.
  double amplitude = 1.0;
  /// Factor applied by the most recent normalize() (1 if never normalized).
  double norm_constant = 1.0;
  std::optional<PositionDomain> normalized_on;
  /// Panels per support interval (even, >= 64).
  std::size_t grid_panels = 256;
  /// k-space weight kept by the last collapse relative to before it.
  double transmission = 1.0;
  /// Set when a retarding field blocked every member.
  bool blocked = false;

  bool empty() const noexcept { return support.empty(); }
};

/// k0 = sqrt(m E) / hbar. Throws DomainError for E <= 0.
double cutoff_wavenumber(double energy, const PhysicalConfig& config);

/// E(k) = hbar^2 k^2 / m, the energy attached to an ensemble member.
double member_energy(double k, const PhysicalConfig& config);

/// Profile value at k (no amplitude, no support test).
std::complex<double> profile_value(const QuantumEnsemble& ensemble, double k);

/// amplitude * profile at k if k lies in the support, else 0.
std::complex<double> amplitude_at(const QuantumEnsemble& ensemble, double k);

/// Throws DomainError for E_T <= 0 or grid_panels < 64.
QuantumEnsemble build_free_ensemble(double total_energy, AmplitudeProfile profile,
                                    std::size_t grid_panels, const PhysicalConfig& config,
                                    EnsembleDimension dim = EnsembleDimension::line);

struct KQuadrature {
  std::vector<double> nodes;
  /// Simpson (Richardson-extrapolated trapezoid) weights.
  std::vector<double> simpson;
  /// Plain trapezoid weights on the same nodes.
  std::vector<double> trapezoid;
};

/// Nodes and weights over every support interval. If every interval has zero
/// width each one contributes a single node of weight 1.
KQuadrature k_quadrature(const QuantumEnsemble& ensemble);

struct Wavefunction {
  std::vector<double> r;
  std::vector<std::complex<double>> psi;
  /// max_r |S - T|: Richardson estimate of the trapezoid error.
  double error_estimate = 0.0;
  /// Non-empty when the support was empty and psi is identically zero.
  std::string warning;
};

/// psi(r) = (2 pi)^(-1/2) int psi0(k) exp(i k r) dk in 1D, or the radial
/// reduction (2 pi)^(-3/2) int 4 pi k^2 psi0(k) sinc(k r) dk in 3D.
Wavefunction evaluate_wavefunction(const QuantumEnsemble& ensemble, std::span<const double> r,
                                   kernels::Backend backend = kernels::Backend::openmp);

/// Piecewise-constant potential; regions [lo, hi) must not overlap.
class PotentialProfile {
 public:
  struct Piece {
    double lo = 0.0;
    double hi = 0.0;
    double value = 0.0;
  };

  PotentialProfile() = default;
  /// Throws DomainError on overlapping or inverted regions.
  explicit PotentialProfile(std::vector<Piece> pieces);

  /// V(r); zero outside every piece.
  double value_at(double r) const noexcept;
  const std::vector<Piece>& pieces() const noexcept { return pieces_; }

 private:
  std::vector<Piece> pieces_;
};

/// Moves the cutoff to k0' = sqrt(m (E_T - V)) / hbar. V < 0 widens the range,
/// V > 0 narrows it. Throws DomainError (total reflection) for V >= E_T.
QuantumEnsemble apply_potential(const QuantumEnsemble& ensemble, double V,
                                const PhysicalConfig& config);

/// Applies the potential found at position r.
QuantumEnsemble apply_potential(const QuantumEnsemble& ensemble, const PotentialProfile& profile,
                                double r, const PhysicalConfig& config);

/// Keeps members with hbar^2 k^2 / m >= V_rfa. The result is not renormalized;
/// `transmission` records the k-space weight kept. V_rfa >= E_T leaves an empty,
/// blocked ensemble. Throws DomainError for V_rfa < 0.
QuantumEnsemble retarding_field_collapse(const QuantumEnsemble& ensemble, double V_rfa,
                                         const PhysicalConfig& config);

/// Position-space integral of |psi|^2 over the domain (Simpson, r_points odd).
double position_norm(const QuantumEnsemble& ensemble, const PositionDomain& domain,
                     std::size_t r_points = 2049,
                     kernels::Backend backend = kernels::Backend::openmp);

/// Rescales so that the integral of |psi|^2 over the domain is 1. Throws
/// DomainError for an empty support, an invalid domain or a zero norm.
QuantumEnsemble normalize(const QuantumEnsemble& ensemble, const PositionDomain& domain,
                          std::size_t r_points = 2049,
                          kernels::Backend backend = kernels::Backend::openmp);

/// <E> = int |psi0|^2 E(k) dmu / int |psi0|^2 dmu with dmu = dk (1D) or
/// k^2 dk (3D). Throws DomainError on an empty support.
double energy_expectation(const QuantumEnsemble& ensemble, const PhysicalConfig& config);

struct ConditioningReport {
  double energy_before = 0.0;
  double energy_after = 0.0;
  double delta_energy = 0.0;
  /// Fraction of the position-space norm that sat in the excluded region.
  double excluded_weight = 0.0;
  /// Always true: the update is a change of knowledge, not an interaction.
  bool statistical_only = true;
};

struct ConditionedEnsemble {
  QuantumEnsemble ensemble;
  ConditioningReport report;
};

/// Zeroes psi(r) on `excluded`, projects the remainder back onto the
/// ensemble's k-range and renormalizes on `domain`. Both energies are computed
/// through the same projection. Throws DomainError if `excluded` is not inside
/// the domain or covers all of it.
ConditionedEnsemble interaction_free_condition(const QuantumEnsemble& ensemble,
                                               const PositionDomain& excluded,
                                               const PositionDomain& domain,
                                               const PhysicalConfig& config,
                                               std::size_t r_points = 2049,
                                               kernels::Backend backend = kernels::Backend::openmp);

}  // namespace extel
