#include "extel/intrinsic_wave.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "extel/errors.hpp"
#include "extel/numerics.hpp"

namespace extel {

namespace {

constexpr double pi = std::numbers::pi;

double phase(const ParticleState& state, double x, double t) { return state.k * x - state.omega * t; }

double transverse_amplitude(const ParticleState& state, const PhysicalConfig& config) {
  return state.u * std::sqrt(state.rho0 / (2.0 * config.sigma_bar()));
}

double moment_field_peak(const ParticleState& state, const PhysicalConfig& config) {
  return state.rho0 * state.u * state.k / (2.0 * config.sigma_bar());
}

double spin_at(double s, const ParticleState& state, double x, const PhysicalConfig& config) {
  return s * moment_field(state, x, 0.0, config) / moment_field_peak(state, config);
}

}  // namespace

std::string_view to_string(ParticleKind kind) {
  return kind == ParticleKind::electron ? "electron" : "photon";
}

ParticleKind parse_particle_kind(std::string_view name) {
  if (name == "electron") return ParticleKind::electron;
  if (name == "photon") return ParticleKind::photon;
  throw DomainError("unknown particle kind '" + std::string(name) + "' (electron|photon)");
}

ParticleState make_particle(ParticleKind kind, double u, const PhysicalConfig& config,
                            double volume) {
  if (!std::isfinite(u) || !(u > 0.0) || u > config.c()) {
    throw DomainError("particle speed must satisfy 0 < u <= c, got u = " + format_double(u));
  }
  if (!std::isfinite(volume) || !(volume > 0.0)) {
    throw DomainError("particle volume must be > 0, got " + format_double(volume));
  }
  if (kind == ParticleKind::photon) u = config.c();

  ParticleState state;
  state.kind = kind;
  state.mass = config.m();
  state.u = u;
  state.omega = config.m() * u * u / config.hbar();
  state.k = config.m() * u / config.hbar();
  state.wavelength = 2.0 * pi * config.hbar() / (config.m() * u);
  state.volume = volume;
  state.rho0 = 2.0 * config.m() / volume;
  return state;
}

EnergyPartition energy_partition(const ParticleState& state) {
  const double half = 0.5 * state.mass * state.u * state.u;
  return {half, half, state.mass * state.u * state.u};
}

FieldSample sample_intrinsic_fields(const ParticleState& state, double x, double t,
                                    const PhysicalConfig& config) {
  const double theta = phase(state, x, t);
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double b = transverse_amplitude(state, config) * s;

  FieldSample out;
  out.rho = state.rho0 * c * c;
  out.momentum = {out.rho * state.u, 0.0, 0.0};
  out.E = {0.0, state.u * b, 0.0};
  out.B = {0.0, 0.0, b};
  out.phi = 0.5 * state.rho0 * state.u * state.u * s * s;
  out.mass_energy = 0.5 * out.rho * state.u * state.u;
  return out;
}

double moment_field(const ParticleState& state, double x, double t, const PhysicalConfig& config) {
  // d/dx [rho0 cos^2(theta) u] = -rho0 u k sin(2 theta)
  return moment_field_peak(state, config) * std::sin(2.0 * phase(state, x, t));
}

IntrinsicEnergy integrate_intrinsic_energy(const ParticleState& state,
                                           const PhysicalConfig& config, std::size_t samples) {
  if (samples < 8) throw DomainError("integrate_intrinsic_energy: need at least 8 samples");
  // Periodic integrand: the trapezoid rule on a full period is spectrally exact.
  double mass = 0.0;
  double field = 0.0;
  const double dx = state.wavelength / static_cast<double>(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const auto f = sample_intrinsic_fields(state, dx * static_cast<double>(i), 0.0, config);
    mass += f.mass_energy;
    field += f.phi;
  }
  const double scale = state.volume / static_cast<double>(samples);
  return {mass * scale, field * scale};
}

SpinParameters spin_parameters(ParticleKind kind, const PhysicalConfig& config) {
  const double u = kind == ParticleKind::photon ? config.c() : 0.5 * config.c();
  const ParticleState state = make_particle(kind, u, config);

  const double target = 0.5 * config.hbar() * state.omega;
  const double peak_x = pi / (4.0 * state.k);
  const double field = moment_field(state, peak_x, 0.0, config);

  // W = g (e / 2m) s |B|  =>  g s = 2 m W / (e |B|)
  const double g_times_s = 2.0 * config.m() * target / (config.e() * std::abs(field));

  const IntrinsicEnergy energy = integrate_intrinsic_energy(state, config);
  const double em_energy = kind == ParticleKind::electron ? energy.field_term : energy.total();

  SpinParameters out;
  out.s = em_energy / state.omega;
  out.g = g_times_s / out.s;
  out.direction = {0.0, 0.0, field >= 0.0 ? 1.0 : -1.0};
  const double back = out.g * config.e() / (2.0 * config.m()) * out.s * std::abs(field);
  out.relative_residual = (back - target) / target;
  return out;
}

double spin_orientation(const ParticleState& state, double x, const PhysicalConfig& config) {
  return spin_at(spin_parameters(state.kind, config).s, state, x, config);
}

EprReport epr_precision_check(const ParticleState& state, double window,
                              const PhysicalConfig& config, std::size_t centers) {
  if (!std::isfinite(window) || !(window > 0.0)) {
    throw DomainError("measurement window must be > 0, got " + format_double(window));
  }
  if (centers < 2) throw DomainError("epr_precision_check: need at least 2 window positions");

  const double s = spin_parameters(state.kind, config).s;
  const double period = 0.5 * state.wavelength;
  constexpr std::size_t panels = 1024;
  const auto weights = simpson_weights(0.0, window, panels);
  const double step = window / static_cast<double>(panels);

  std::vector<double> averages(centers);
  const auto n = static_cast<std::ptrdiff_t>(centers);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const double start = period * static_cast<double>(i) / static_cast<double>(centers) - 0.5 * window;
    double acc = 0.0;
    for (std::size_t j = 0; j <= panels; ++j) {
      acc += weights[j] * spin_at(s, state, start + step * static_cast<double>(j), config);
    }
    averages[static_cast<std::size_t>(i)] = acc / window;
  }

  EprReport report;
  report.window = window;
  report.half_wavelength = period;
  report.resolvable = window < period;
  const auto [lo, hi] = std::minmax_element(averages.begin(), averages.end());
  report.min_windowed_spin = *lo;
  report.max_windowed_spin = *hi;
  return report;
}

FieldResidual verify_field_equations(const ParticleState& state, double h,
                                     const PhysicalConfig& config, DerivativeMode mode) {
  if (!std::isfinite(h) || !(h > 0.0)) {
    throw DomainError("grid spacing must be > 0, got " + format_double(h));
  }
  if (h > state.wavelength / 16.0) {
    throw DomainError("grid too coarse: h = " + format_double(h) + " exceeds lambda/16 = " +
                      format_double(state.wavelength / 16.0));
  }

  const auto points = static_cast<std::size_t>(std::ceil(state.wavelength / h));
  const double dt = h / (2.0 * state.u);
  const double inv_u2 = 1.0 / (state.u * state.u);
  const double amp = transverse_amplitude(state, config);

  FieldResidual out;
  out.spacing = h;
  for (std::size_t j = 0; j < points; ++j) {
    const double x = h * static_cast<double>(j);
    double dEy_dt = 0.0;
    double dEy_dx = 0.0;
    double dBz_dt = 0.0;
    double dBz_dx = 0.0;
    if (mode == DerivativeMode::analytic) {
      const double c = std::cos(phase(state, x, 0.0));
      dBz_dt = -amp * state.omega * c;
      dBz_dx = amp * state.k * c;
      dEy_dt = state.u * dBz_dt;
      dEy_dx = state.u * dBz_dx;
    } else {
      const auto f_tp = sample_intrinsic_fields(state, x, dt, config);
      const auto f_tm = sample_intrinsic_fields(state, x, -dt, config);
      const auto f_xp = sample_intrinsic_fields(state, x + h, 0.0, config);
      const auto f_xm = sample_intrinsic_fields(state, x - h, 0.0, config);
      dEy_dt = (f_tp.E[1] - f_tm.E[1]) / (2.0 * dt);
      dBz_dt = (f_tp.B[2] - f_tm.B[2]) / (2.0 * dt);
      dEy_dx = (f_xp.E[1] - f_xm.E[1]) / (2.0 * h);
      dBz_dx = (f_xp.B[2] - f_xm.B[2]) / (2.0 * h);
    }
    // (curl B)_y = -dBz/dx, (curl E)_z = dEy/dx
    out.ampere = std::max(out.ampere, std::abs(inv_u2 * dEy_dt + dBz_dx));
    out.faraday = std::max(out.faraday, std::abs(dBz_dt + dEy_dx));
  }
  return out;
}

}  // namespace extel
