#include "extel/absorption.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "extel/errors.hpp"
#include "extel/numerics.hpp"

namespace extel {

namespace {

constexpr double nan = std::numeric_limits<double>::quiet_NaN();

struct VelocityPoint {
  double u;
  double value;
};

/// Linear interpolation in u over points sorted by u.
double interpolate(std::span<const VelocityPoint> points, double u) {
  auto it = std::lower_bound(points.begin(), points.end(), u,
                             [](const VelocityPoint& p, double x) { return p.u < x; });
  if (it == points.end()) throw DomainError("velocity " + format_double(u) + " not reached by trace");
  if (it->u == u || it == points.begin()) return it->value;
  const auto& a = *(it - 1);
  const auto& b = *it;
  const double t = (u - a.u) / (b.u - a.u);
  return a.value + t * (b.value - a.value);
}

void check_grid_quantum(double quantum, const PhysicalConfig& config) {
  const double bound = max_grid_quantum(config);
  if (!(quantum > 0.0) || quantum > bound) {
    throw DomainError("hw0 = " + format_double(quantum) +
                      " too coarse for the velocity grid: need 0 < hw0 <= 0.0025 m c^2 = " +
                      format_double(bound));
  }
}

AbsorptionTrace grid_trace(double quantum, const PhysicalConfig& config) {
  return absorption_sequence(quantum, std::numeric_limits<std::size_t>::max() - 1,
                             1e-12 * config.rest_energy(), config);
}

}  // namespace

AbsorptionTrace absorption_sequence(double quantum, std::size_t max_steps, double tol,
                                    const PhysicalConfig& config) {
  const double rest = config.rest_energy();
  if (!std::isfinite(quantum) || !(quantum > 0.0) || !(quantum < rest)) {
    throw DomainError("photon quantum must satisfy 0 < hw0 < m c^2 = " + format_double(rest) +
                      ", got hw0 = " + format_double(quantum));
  }
  if (max_steps < 1) throw DomainError("absorption_sequence: n_max must be >= 1");
  if (!(tol > 0.0)) throw DomainError("absorption_sequence: tolerance must be > 0");

  const double m = config.m();
  const double c2 = config.c() * config.c();

  AbsorptionTrace trace;
  trace.quantum = quantum;
  trace.tolerance = tol;
  double energy = quantum;
  trace.rows.push_back({0, energy, std::sqrt(energy / m), std::sqrt(quantum / m), 0.0});

  while (trace.rows.size() <= max_steps) {
    const double u = trace.rows.back().u;
    const double increment = quantum * std::sqrt(std::max(0.0, 1.0 - u * u / c2));
    if (increment < tol) {
      trace.converged = true;
      break;
    }
    const double next = std::min(energy + increment, rest);
    if (next == energy) {
      trace.converged = true;
      break;
    }
    energy = next;
    const std::size_t n = trace.rows.size();
    trace.rows.push_back({n, energy, std::min(std::sqrt(energy / m), config.c()),
                          std::sqrt(static_cast<double>(n + 1) * quantum / m), 0.0});
  }
  trace.energy_limit = energy;

  std::vector<std::string> diagnostics;
  const auto alphas = alpha_factor(trace, config, &diagnostics);
  for (auto& row : trace.rows) row.alpha = nan;
  for (const auto& a : alphas) trace.rows[a.n].alpha = a.alpha;
  trace.diagnostics = std::move(diagnostics);
  return trace;
}

double gamma(double u, const PhysicalConfig& config) {
  if (!std::isfinite(u) || u < 0.0 || u >= config.c()) {
    throw DomainError("gamma requires 0 <= u < c, got u = " + format_double(u));
  }
  const double beta = u / config.c();
  return 1.0 / std::sqrt(1.0 - beta * beta);
}

std::vector<AlphaPoint> alpha_factor(const AbsorptionTrace& trace, const PhysicalConfig& config,
                                     std::vector<std::string>* diagnostics) {
  if (trace.rows.size() < 2) throw DomainError("alpha_factor: trace needs at least 2 rows");
  const double m = config.m();
  const double classical_unit = std::sqrt(trace.quantum / m);

  std::vector<AlphaPoint> out;
  out.reserve(trace.rows.size());
  for (std::size_t n = 0; n < trace.rows.size(); ++n) {
    const auto& row = trace.rows[n];
    // u_n - u_{n-1} written as (E_n - E_{n-1}) / (m (u_n + u_{n-1})) to avoid cancellation.
    double du = row.u;
    if (n > 0) {
      const auto& prev = trace.rows[n - 1];
      du = (row.energy - prev.energy) / (m * (row.u + prev.u));
    }
    if (!(du > 0.0)) {
      if (diagnostics) {
        diagnostics->push_back("row " + std::to_string(n) + ": velocity unchanged, alpha skipped");
      }
      continue;
    }
    const auto quanta = static_cast<double>(n + 1);
    // sqrt(N) - sqrt(N - 1) = 1 / (sqrt(N) + sqrt(N - 1))
    const double classical_step = classical_unit / (std::sqrt(quanta) + std::sqrt(quanta - 1.0));
    out.push_back({n, row.u, classical_step / du * row.u_classical / row.u});
  }
  return out;
}

std::vector<double> velocity_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 19; ++i) grid.push_back(0.05 * i);
  grid.push_back(0.99);
  return grid;
}

double max_grid_quantum(const PhysicalConfig& config) { return 0.0025 * config.rest_energy(); }

AlphaGammaTable alpha_gamma_table(double quantum, const PhysicalConfig& config, double threshold) {
  check_grid_quantum(quantum, config);
  const auto trace = grid_trace(quantum, config);

  std::vector<VelocityPoint> points{{0.0, 1.0}};
  for (const auto& row : trace.rows) {
    if (std::isfinite(row.alpha)) points.push_back({row.u, row.alpha});
  }

  AlphaGammaTable table;
  table.threshold = threshold;
  for (double beta : velocity_grid()) {
    const double u = beta * config.c();
    AlphaGammaRow row;
    row.beta = beta;
    row.alpha = interpolate(points, u);
    row.gamma = gamma(u, config);
    row.deviation = std::abs(row.alpha / row.gamma - 1.0);
    table.max_deviation = std::max(table.max_deviation, row.deviation);
    table.rows.push_back(row);
  }
  table.within_threshold = table.max_deviation < threshold;
  return table;
}

std::vector<EnergyCurveRow> energy_comparison_curves(double quantum, const PhysicalConfig& config) {
  check_grid_quantum(quantum, config);
  const auto trace = grid_trace(quantum, config);
  const double rest = config.rest_energy();

  std::vector<VelocityPoint> points{{0.0, 0.0}};
  for (const auto& row : trace.rows) {
    if (row.u > points.back().u) points.push_back({row.u, row.energy});
  }

  std::vector<EnergyCurveRow> out;
  for (double beta : velocity_grid()) {
    const double u = beta * config.c();
    EnergyCurveRow row;
    row.beta = beta;
    row.interaction = interpolate(points, u);
    row.interaction_with_rest = row.interaction + rest;
    row.special_relativity = gamma(u, config) * rest;
    out.push_back(row);
  }
  return out;
}

SelfEnergyCurve weisskopf_self_energy(std::span<const double> radii, const PhysicalConfig& config) {
  SelfEnergyCurve curve;
  const double e2 = config.e() * config.e();
  for (double a : radii) {
    if (!std::isfinite(a) || !(a > 0.0)) {
      throw DomainError("self-energy radius must be > 0, got a = " + format_double(a));
    }
    curve.radius.push_back(a);
    curve.electrostatic.push_back(e2 / a);
    curve.fluctuation.push_back(e2 * config.h() / (std::numbers::pi * config.m() * config.c() * a * a));
  }
  return curve;
}

double bethe_lamb_shift(double C, double cutoff, double mean_level_spacing) {
  if (!(cutoff > 0.0) || !(mean_level_spacing > 0.0) || !std::isfinite(cutoff) ||
      !std::isfinite(mean_level_spacing)) {
    throw DomainError("Lamb-shift logarithm needs K > 0 and dE_avg > 0, got K = " +
                      format_double(cutoff) + ", dE_avg = " + format_double(mean_level_spacing));
  }
  return C * std::log(cutoff / mean_level_spacing);
}

double bethe_lamb_shift(double C, double mean_level_spacing, const PhysicalConfig& config) {
  return bethe_lamb_shift(C, config.rest_energy(), mean_level_spacing);
}

}  // namespace extel
