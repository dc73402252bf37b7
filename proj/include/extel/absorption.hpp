#pragma once

#include <span>
#include <string>
#include <vector>

#include "extel/config.hpp"

namespace extel {

/// Row n of the photon-absorption recursion. Row n has absorbed n + 1 quanta.
struct AbsorptionRow {
  std::size_t n = 0;
  double energy = 0.0;
  /// Interaction-model velocity sqrt(E_n / m).
  double u = 0.0;
  /// Classical velocity after the same number of quanta, sqrt((n + 1) hw0 / m).
  double u_classical = 0.0;
  /// Virtual mass factor; NaN where the step had to be skipped.
  double alpha = 0.0;
};

struct AbsorptionTrace {
  double quantum = 0.0;
  double tolerance = 0.0;
  std::vector<AbsorptionRow> rows;
  /// True when the last increment fell below the tolerance (or the energy
  /// reached m c^2) before the step limit.
  bool converged = false;
  double energy_limit = 0.0;
  std::vector<std::string> diagnostics;
};

/// E_0 = hw0, E_{n+1} = min(E_n + hw0 sqrt(max(0, 1 - (u_n / c)^2)), m c^2),
/// u_n = sqrt(E_n / m). Stops after max_steps rows or once the increment drops
/// below tol. Throws DomainError unless 0 < hw0 < m c^2, max_steps >= 1 and tol > 0.
AbsorptionTrace absorption_sequence(double quantum, std::size_t max_steps, double tol,
                                    const PhysicalConfig& config);

/// Lorentz factor 1 / sqrt(1 - u^2 / c^2). Throws DomainError unless 0 <= u < c.
double gamma(double u, const PhysicalConfig& config);

struct AlphaPoint {
  std::size_t n = 0;
  double u = 0.0;
  double alpha = 0.0;
};

/// alpha_n = sqrt(hw0 / m) (sqrt(N) - sqrt(N - 1)) / (u_n - u_{n-1}) * u_n^c / u_n
/// with N = n + 1 absorbed quanta and u_{-1} = 0 (rest). Rows where the
/// velocity did not change are skipped and reported in `diagnostics`.
std::vector<AlphaPoint> alpha_factor(const AbsorptionTrace& trace, const PhysicalConfig& config,
                                     std::vector<std::string>* diagnostics = nullptr);

struct AlphaGammaRow {
  double beta = 0.0;
  double alpha = 0.0;
  double gamma = 0.0;
  /// |alpha / gamma - 1|
  double deviation = 0.0;
};

struct AlphaGammaTable {
  std::vector<AlphaGammaRow> rows;
  double max_deviation = 0.0;
  double threshold = 0.0;
  bool within_threshold = true;
};

/// u/c = 0.05, 0.10, ..., 0.95, 0.99.
std::vector<double> velocity_grid();

/// Largest quantum that still resolves the first grid point: 0.0025 m c^2.
double max_grid_quantum(const PhysicalConfig& config);

/// alpha linearly interpolated in u between neighbouring trace rows, next to
/// gamma on velocity_grid(). `threshold` is the relative deviation regarded as
/// insignificant. Throws DomainError if hw0 > max_grid_quantum.
AlphaGammaTable alpha_gamma_table(double quantum, const PhysicalConfig& config,
                                  double threshold = 0.10);

struct EnergyCurveRow {
  double beta = 0.0;
  /// Trace energy E = m u^2 at this velocity (bounded by m c^2).
  double interaction = 0.0;
  /// Same energy with the rest energy m c^2 added, for comparison with E_SR.
  double interaction_with_rest = 0.0;
  /// gamma m c^2
  double special_relativity = 0.0;
};

std::vector<EnergyCurveRow> energy_comparison_curves(double quantum, const PhysicalConfig& config);

struct SelfEnergyCurve {
  std::vector<double> radius;
  /// e^2 / a
  std::vector<double> electrostatic;
  /// e^2 h / (pi m c a^2)
  std::vector<double> fluctuation;
};

/// Throws DomainError if any radius is <= 0.
SelfEnergyCurve weisskopf_self_energy(std::span<const double> radii, const PhysicalConfig& config);

/// C ln(K / dE_avg). Throws DomainError unless K > 0 and dE_avg > 0.
double bethe_lamb_shift(double C, double cutoff, double mean_level_spacing);

/// Same with the cutoff K = m c^2.
double bethe_lamb_shift(double C, double mean_level_spacing, const PhysicalConfig& config);

}  // namespace extel
