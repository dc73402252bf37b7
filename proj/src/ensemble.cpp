#include "extel/ensemble.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "extel/errors.hpp"
#include "extel/numerics.hpp"

namespace extel {

namespace {

constexpr double pi = std::numbers::pi;

double prefactor(EnsembleDimension dim) {
  return dim == EnsembleDimension::line ? 1.0 / std::sqrt(2.0 * pi)
                                        : 1.0 / std::pow(2.0 * pi, 1.5);
}

/// Measure factor of the k integral: dk in 1D, k^2 dk in the radial case
/// (the 4 pi cancels in every ratio it enters).
double k_measure(EnsembleDimension dim, double k) {
  return dim == EnsembleDimension::line ? 1.0 : k * k;
}

double r_measure(EnsembleDimension dim, double r) {
  return dim == EnsembleDimension::line ? 1.0 : 4.0 * pi * r * r;
}

void check_domain(const PositionDomain& domain, EnsembleDimension dim) {
  if (!std::isfinite(domain.lo) || !std::isfinite(domain.hi) || !(domain.lo < domain.hi)) {
    throw DomainError("position domain must be finite with lo < hi");
  }
  if (dim == EnsembleDimension::radial3d && domain.lo < 0.0) {
    throw DomainError("radial domain must start at r >= 0");
  }
}

std::size_t odd_points(std::size_t r_points) {
  if (r_points < 3) throw DomainError("need at least 3 position samples");
  return r_points % 2 == 1 ? r_points : r_points + 1;
}

enum class Rule { simpson, trapezoid };

std::vector<std::complex<double>> synthesize(const QuantumEnsemble& ensemble,
                                             const KQuadrature& quad, Rule rule,
                                             std::span<const double> r,
                                             kernels::Backend backend) {
  const auto& w = rule == Rule::simpson ? quad.simpson : quad.trapezoid;
  std::vector<std::complex<double>> weights(quad.nodes.size());
  const double pre = prefactor(ensemble.dim) * ensemble.amplitude;
  for (std::size_t j = 0; j < quad.nodes.size(); ++j) {
    weights[j] = pre * w[j] * profile_value(ensemble, quad.nodes[j]);
  }
  std::vector<std::complex<double>> out(r.size());
  if (ensemble.dim == EnsembleDimension::line) {
    kernels::fourier_sum(backend, quad.nodes, weights, r, +1, out);
  } else {
    kernels::radial_sum(backend, quad.nodes, weights, r, out);
  }
  return out;
}

/// Inverse transform of psi(r) sampled with quadrature weights, evaluated at k.
std::vector<std::complex<double>> project(EnsembleDimension dim, std::span<const double> r,
                                          std::span<const double> r_weights,
                                          std::span<const std::complex<double>> psi,
                                          std::span<const double> k, kernels::Backend backend) {
  std::vector<std::complex<double>> weights(r.size());
  const double pre = prefactor(dim);
  for (std::size_t i = 0; i < r.size(); ++i) weights[i] = pre * r_weights[i] * psi[i];
  std::vector<std::complex<double>> out(k.size());
  if (dim == EnsembleDimension::line) {
    kernels::fourier_sum(backend, r, weights, k, -1, out);
  } else {
    kernels::radial_sum(backend, r, weights, k, out);
  }
  return out;
}

double weighted_energy(EnsembleDimension dim, const KQuadrature& quad,
                       std::span<const std::complex<double>> amplitudes,
                       const PhysicalConfig& config) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t j = 0; j < quad.nodes.size(); ++j) {
    const double k = quad.nodes[j];
    const double weight = quad.simpson[j] * std::norm(amplitudes[j]) * k_measure(dim, k);
    num += weight * member_energy(k, config);
    den += weight;
  }
  if (!(den > 0.0)) throw DomainError("energy expectation: ensemble carries no weight");
  return num / den;
}

double k_weight(const QuantumEnsemble& ensemble) {
  if (ensemble.empty()) return 0.0;
  const auto quad = k_quadrature(ensemble);
  double total = 0.0;
  for (std::size_t j = 0; j < quad.nodes.size(); ++j) {
    total += quad.simpson[j] * std::norm(amplitude_at(ensemble, quad.nodes[j])) *
             k_measure(ensemble.dim, quad.nodes[j]);
  }
  return total;
}

}  // namespace

double cutoff_wavenumber(double energy, const PhysicalConfig& config) {
  if (!std::isfinite(energy) || !(energy > 0.0)) {
    throw DomainError("total energy must be > 0, got " + format_double(energy));
  }
  return std::sqrt(config.m() * energy) / config.hbar();
}

double member_energy(double k, const PhysicalConfig& config) {
  return config.hbar() * config.hbar() * k * k / config.m();
}

std::complex<double> profile_value(const QuantumEnsemble& ensemble, double k) {
  const double q = k / ensemble.k0;
  return std::visit(
      [q](const auto& profile) -> std::complex<double> {
        using T = std::decay_t<decltype(profile)>;
        if constexpr (std::is_same_v<T, UniformProfile>) {
          return 1.0;
        } else if constexpr (std::is_same_v<T, GaussianProfile>) {
          const double d = (q - profile.center) / profile.width;
          return std::exp(-0.5 * d * d);
        } else {
          const auto& v = profile.values;
          if (v.empty()) return 0.0;
          if (v.size() == 1) return v.front();
          const double pos = std::clamp(q, 0.0, 1.0) * static_cast<double>(v.size() - 1);
          const auto i = std::min(static_cast<std::size_t>(pos), v.size() - 2);
          const double t = pos - static_cast<double>(i);
          return (1.0 - t) * v[i] + t * v[i + 1];
        }
      },
      ensemble.profile);
}

std::complex<double> amplitude_at(const QuantumEnsemble& ensemble, double k) {
  for (const auto& iv : ensemble.support) {
    if (k >= iv.lo && k <= iv.hi) return ensemble.amplitude * profile_value(ensemble, k);
  }
  return 0.0;
}

QuantumEnsemble build_free_ensemble(double total_energy, AmplitudeProfile profile,
                                    std::size_t grid_panels, const PhysicalConfig& config,
                                    EnsembleDimension dim) {
  if (grid_panels < 64) {
    throw DomainError("k-grid resolution must be >= 64, got " + std::to_string(grid_panels));
  }
  if (const auto* g = std::get_if<GaussianProfile>(&profile); g && !(g->width > 0.0)) {
    throw DomainError("gaussian profile width must be > 0");
  }
  QuantumEnsemble out;
  out.profile = std::move(profile);
  out.total_energy = total_energy;
  out.k0 = cutoff_wavenumber(total_energy, config);
  out.support = {{0.0, out.k0}};
  out.dim = dim;
  out.grid_panels = grid_panels + grid_panels % 2;
  return out;
}

KQuadrature k_quadrature(const QuantumEnsemble& ensemble) {
  KQuadrature quad;
  const bool any_width = std::any_of(ensemble.support.begin(), ensemble.support.end(),
                                     [](const KInterval& iv) { return iv.width() > 0.0; });
  for (const auto& iv : ensemble.support) {
    if (!any_width) {
      quad.nodes.push_back(iv.lo);
      quad.simpson.push_back(1.0);
      quad.trapezoid.push_back(1.0);
      continue;
    }
    if (!(iv.width() > 0.0)) continue;
    const auto nodes = linspace(iv.lo, iv.hi, ensemble.grid_panels + 1);
    const auto s = simpson_weights(iv.lo, iv.hi, ensemble.grid_panels);
    const auto t = trapezoid_weights(iv.lo, iv.hi, ensemble.grid_panels);
    quad.nodes.insert(quad.nodes.end(), nodes.begin(), nodes.end());
    quad.simpson.insert(quad.simpson.end(), s.begin(), s.end());
    quad.trapezoid.insert(quad.trapezoid.end(), t.begin(), t.end());
  }
  return quad;
}

Wavefunction evaluate_wavefunction(const QuantumEnsemble& ensemble, std::span<const double> r,
                                   kernels::Backend backend) {
  Wavefunction out;
  out.r.assign(r.begin(), r.end());
  if (ensemble.empty()) {
    out.psi.assign(r.size(), 0.0);
    out.warning = "empty support: wavefunction is identically zero";
    return out;
  }
  const auto quad = k_quadrature(ensemble);
  out.psi = synthesize(ensemble, quad, Rule::simpson, r, backend);
  const auto coarse = synthesize(ensemble, quad, Rule::trapezoid, r, backend);
  for (std::size_t i = 0; i < r.size(); ++i) {
    out.error_estimate = std::max(out.error_estimate, std::abs(out.psi[i] - coarse[i]));
  }
  return out;
}

PotentialProfile::PotentialProfile(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  for (const auto& p : pieces_) {
    if (!(p.lo < p.hi)) throw DomainError("potential region must satisfy lo < hi");
  }
  std::sort(pieces_.begin(), pieces_.end(), [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (pieces_[i].lo < pieces_[i - 1].hi) throw DomainError("potential regions overlap");
  }
}

double PotentialProfile::value_at(double r) const noexcept {
  for (const auto& p : pieces_) {
    if (r >= p.lo && r < p.hi) return p.value;
  }
  return 0.0;
}

QuantumEnsemble apply_potential(const QuantumEnsemble& ensemble, double V,
                                const PhysicalConfig& config) {
  if (!std::isfinite(V)) throw DomainError("potential must be finite");
  if (V >= ensemble.total_energy) {
    throw DomainError("total reflection: V = " + format_double(V) + " >= E_T = " +
                      format_double(ensemble.total_energy) + " leaves no allowed member");
  }
  if (V == 0.0) return ensemble;

  QuantumEnsemble out = ensemble;
  out.total_energy = ensemble.total_energy - V;
  out.k0 = cutoff_wavenumber(out.total_energy, config);
  const double scale = out.k0 / ensemble.k0;
  for (auto& iv : out.support) {
    iv.lo *= scale;
    iv.hi = iv.hi == ensemble.k0 ? out.k0 : std::min(iv.hi * scale, out.k0);
  }
  out.normalized_on.reset();
  return out;
}

QuantumEnsemble apply_potential(const QuantumEnsemble& ensemble, const PotentialProfile& profile,
                                double r, const PhysicalConfig& config) {
  return apply_potential(ensemble, profile.value_at(r), config);
}

QuantumEnsemble retarding_field_collapse(const QuantumEnsemble& ensemble, double V_rfa,
                                         const PhysicalConfig& config) {
  if (!std::isfinite(V_rfa) || V_rfa < 0.0) {
    throw DomainError("retarding potential must be >= 0, got " + format_double(V_rfa));
  }
  QuantumEnsemble out = ensemble;
  out.transmission = 1.0;
  if (V_rfa == 0.0) return out;

  const double before = k_weight(ensemble);
  std::vector<KInterval> kept;
  if (V_rfa < ensemble.total_energy) {
    const double threshold = std::sqrt(config.m() * V_rfa) / config.hbar();
    for (const auto& iv : ensemble.support) {
      if (iv.width() == 0.0) {
        if (iv.lo >= threshold) kept.push_back(iv);
        continue;
      }
      const double lo = std::max(iv.lo, threshold);
      if (lo < iv.hi) kept.push_back({lo, iv.hi});
    }
  }
  out.support = std::move(kept);
  out.blocked = out.support.empty();
  out.transmission = before > 0.0 ? k_weight(out) / before : 0.0;
  return out;
}

double position_norm(const QuantumEnsemble& ensemble, const PositionDomain& domain,
                     std::size_t r_points, kernels::Backend backend) {
  check_domain(domain, ensemble.dim);
  const std::size_t n = odd_points(r_points);
  const auto r = linspace(domain.lo, domain.hi, n);
  const auto w = simpson_weights(domain.lo, domain.hi, n - 1);
  if (ensemble.empty()) return 0.0;
  const auto psi = synthesize(ensemble, k_quadrature(ensemble), Rule::simpson, r, backend);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += w[i] * std::norm(psi[i]) * r_measure(ensemble.dim, r[i]);
  return total;
}

QuantumEnsemble normalize(const QuantumEnsemble& ensemble, const PositionDomain& domain,
                          std::size_t r_points, kernels::Backend backend) {
  if (ensemble.empty()) throw DomainError("cannot normalize an ensemble with empty support");
  const double norm = position_norm(ensemble, domain, r_points, backend);
  if (!std::isfinite(norm) || !(norm > 0.0)) {
    throw DomainError("cannot normalize: wavefunction norm on the domain is zero");
  }
  QuantumEnsemble out = ensemble;
  out.norm_constant = 1.0 / std::sqrt(norm);
  out.amplitude *= out.norm_constant;
  out.normalized_on = domain;
  return out;
}

double energy_expectation(const QuantumEnsemble& ensemble, const PhysicalConfig& config) {
  if (ensemble.empty()) throw DomainError("energy expectation of an empty ensemble");
  const auto quad = k_quadrature(ensemble);
  std::vector<std::complex<double>> amplitudes(quad.nodes.size());
  for (std::size_t j = 0; j < quad.nodes.size(); ++j) {
    amplitudes[j] = ensemble.amplitude * profile_value(ensemble, quad.nodes[j]);
  }
  return weighted_energy(ensemble.dim, quad, amplitudes, config);
}

ConditionedEnsemble interaction_free_condition(const QuantumEnsemble& ensemble,
                                               const PositionDomain& excluded,
                                               const PositionDomain& domain,
                                               const PhysicalConfig& config,
                                               std::size_t r_points,
                                               kernels::Backend backend) {
  check_domain(domain, ensemble.dim);
  if (!(excluded.lo <= excluded.hi) || excluded.lo < domain.lo || excluded.hi > domain.hi) {
    throw DomainError("excluded region must lie inside the domain");
  }
  if (excluded.lo == domain.lo && excluded.hi == domain.hi) {
    throw DomainError("excluded region covers the whole domain");
  }
  if (ensemble.empty()) throw DomainError("cannot condition an ensemble with empty support");

  if (excluded.lo == excluded.hi) {
    const double e = energy_expectation(ensemble, config);
    return {ensemble, {e, e, 0.0, 0.0, true}};
  }

  const std::size_t n = odd_points(r_points);
  const auto r = linspace(domain.lo, domain.hi, n);
  const auto w = simpson_weights(domain.lo, domain.hi, n - 1);
  const auto quad = k_quadrature(ensemble);
  const auto psi = synthesize(ensemble, quad, Rule::simpson, r, backend);

  auto masked = psi;
  double total = 0.0;
  double removed = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double weight = w[i] * std::norm(psi[i]) * r_measure(ensemble.dim, r[i]);
    total += weight;
    if (r[i] >= excluded.lo && r[i] <= excluded.hi) {
      masked[i] = 0.0;
      removed += weight;
    }
  }

  const auto before = project(ensemble.dim, r, w, psi, quad.nodes, backend);
  const auto after = project(ensemble.dim, r, w, masked, quad.nodes, backend);

  ConditioningReport report;
  report.energy_before = weighted_energy(ensemble.dim, quad, before, config);
  report.energy_after = weighted_energy(ensemble.dim, quad, after, config);
  report.delta_energy = report.energy_after - report.energy_before;
  report.excluded_weight = total > 0.0 ? removed / total : 0.0;

  // Tabulate the conditioned amplitude on q = k / k0 in [0, 1].
  const std::size_t table_points = 4 * ensemble.grid_panels + 1;
  auto q_nodes = linspace(0.0, ensemble.k0, table_points);
  QuantumEnsemble out = ensemble;
  out.profile = TabulatedProfile{project(ensemble.dim, r, w, masked, q_nodes, backend)};
  out.amplitude = 1.0;
  out.transmission = 1.0;
  return {normalize(out, domain, r_points, backend), report};
}

}  // namespace extel
