// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "extel/absorption.hpp"
#include "extel/config.hpp"
#include "extel/electrostatic.hpp"
#include "extel/ensemble.hpp"
#include "extel/intrinsic_wave.hpp"
#include "extel/magnetic.hpp"
#include "extel/numerics.hpp"

using namespace extel;

namespace {

int failures = 0;

void report(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("[%s] %2d %-34s %s\n", ok ? "PASS" : "FAIL", id, title, detail.c_str());
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), f, a);
  return buf;
}

std::string fmt(const char* f, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), f, a, b);
  return buf;
}

std::string fmt(const char* f, double a, double b, double c) {
  char buf[200];
  std::snprintf(buf, sizeof(buf), f, a, b, c);
  return buf;
}

const PhysicalConfig cfg = natural_units();

void fixed_point_convergence() {
  bool ok = true;
  std::string detail;
  for (double q : {1e-3, 1e-4}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto trace = absorption_sequence(q * cfg.rest_energy(), 100'000'000,
                                           1e-8 * cfg.rest_energy(), cfg);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool monotone = true;
    for (std::size_t i = 1; i < trace.rows.size(); ++i) {
      monotone = monotone && trace.rows[i].energy > trace.rows[i - 1].energy &&
                 trace.rows[i].u > trace.rows[i - 1].u;
    }
    const double gap = std::abs(trace.energy_limit - cfg.rest_energy()) / cfg.rest_energy();
    ok = ok && trace.converged && monotone && gap < 1e-4 && secs < 5.0;
    detail += fmt("hw0=%g: gap=%.3g ", q, gap) + fmt("t=%.3fs ", secs) +
              (monotone ? "monotone; " : "NOT monotone; ");
  }
  report(1, "fixed-point convergence", ok, detail);
}

void alpha_vs_gamma() {
  // Twice the maximum deviation measured by the reference implementation.
  constexpr double kThreshold = 6.8677e-4;
  const auto table = alpha_gamma_table(1e-4 * cfg.rest_energy(), cfg, kThreshold);
  const bool below_ten_percent = std::all_of(table.rows.begin(), table.rows.end(),
                                             [](const auto& r) { return r.deviation < 0.10; });
  report(2, "alpha vs gamma", below_ten_percent && table.within_threshold && table.rows.size() == 20,
         fmt("max |alpha/gamma-1| = %.4e (threshold %.4e)", table.max_deviation, kThreshold));
}

void bounded_energy() {
  const auto trace = absorption_sequence(1e-4 * cfg.rest_energy(), 100'000'000,
                                         1e-8 * cfg.rest_energy(), cfg);
  double max_energy = 0.0;
  for (const auto& row : trace.rows) max_energy = std::max(max_energy, row.energy);
  const double g = gamma(0.99 * cfg.c(), cfg);
  const bool ok = max_energy <= cfg.rest_energy() && std::abs(g - 7.0888) <= 1e-3;
  report(3, "bounded vs divergent energy", ok,
         fmt("max E/mc^2 = %.12f, gamma(0.99c) = %.6f", max_energy / cfg.rest_energy(), g));
}

void phase_linearity() {
  const double l = 2.5, u = 0.6, rho_bar = 1.3;
  const double lambda = make_particle(ParticleKind::electron, u, cfg).wavelength;
  const auto Bs = linspace(0.0, 1.0, 50);
  const auto sweep = phase_sweep(l, lambda, u, rho_bar, Bs);
  std::vector<double> raw;
  for (const auto& row : sweep.rows) raw.push_back(row.phase.raw);
  const auto fit = fit_line(Bs, raw);
  const double expected = 2.0 * std::numbers::pi * l / (lambda * std::sqrt(rho_bar * u * u));
  const double slope_err = std::abs(fit.slope - expected) / expected;
  report(4, "phase linearity", fit.rms_residual < 1e-12 && slope_err < 1e-12,
         fmt("rms residual = %.3g, slope rel err = %.3g", fit.rms_residual, slope_err));
}

void angle_independence() {
  const auto state = make_particle(ParticleKind::electron, 0.5, cfg);
  double lo = INFINITY, hi = -INFINITY;
  for (double theta : linspace(0.0, std::numbers::pi, 100)) {
    const double phi = apply_external_field(make_scenario(state, 0.7, theta, 1.0, cfg));
    lo = std::min(lo, phi);
    hi = std::max(hi, phi);
  }
  report(5, "angle independence", hi - lo == 0.0, fmt("max - min over 100 angles = %g", hi - lo));
}

void ensemble_cutoff_and_collapse() {
  const double E_T = 2.0;
  const auto ens = build_free_ensemble(E_T, UniformProfile{}, 256, cfg);
  const double k0_expected = std::sqrt(cfg.m() * E_T) / cfg.hbar();
  const double k0_err = std::abs(ens.k0 - k0_expected) / k0_expected;
  const double k_up = apply_potential(ens, -0.5, cfg).k0;
  const double k_down = apply_potential(ens, 0.5, cfg).k0;

  const double V_rfa = 0.25 * E_T;
  const auto once = retarding_field_collapse(ens, V_rfa, cfg);
  const auto twice = retarding_field_collapse(once, V_rfa, cfg);
  const KInterval expected{std::sqrt(cfg.m() * V_rfa) / cfg.hbar(), ens.k0};
  const bool exact_support = once.support.size() == 1 && once.support[0] == expected;
  const bool idempotent = twice.support == once.support && twice.k0 == once.k0 &&
                          twice.amplitude == once.amplitude;
  const double e_before = energy_expectation(ens, cfg);
  const double e_after = energy_expectation(once, cfg);

  const bool ok = k0_err < 1e-12 && k_up > ens.k0 && ens.k0 > k_down && exact_support &&
                  idempotent && e_after >= e_before;
  report(6, "ensemble cutoff and collapse", ok,
         fmt("k0 rel err = %.3g, k0'(V<0)=%.6f, k0'(V>0)=%.6f", k0_err, k_up, k_down) +
             (exact_support ? ", support exact" : ", support WRONG") +
             (idempotent ? ", idempotent" : ", NOT idempotent") +
             fmt(", <E> %.6f -> %.6f", e_before, e_after));
}

double quadrature_error(std::size_t panels, std::span<const double> r) {
  const auto ens = build_free_ensemble(1.0, UniformProfile{}, panels, cfg);
  const auto wf = evaluate_wavefunction(ens, r);
  const std::complex<double> i{0.0, 1.0};
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < r.size(); ++j) {
    const auto exact = (std::exp(i * ens.k0 * r[j]) - 1.0) / (i * r[j]) /
                       std::sqrt(2.0 * std::numbers::pi);
    num = std::max(num, std::abs(wf.psi[j] - exact));
    den = std::max(den, std::abs(exact));
  }
  return num / den;
}

void closed_form_quadrature() {
  const auto r = linspace(0.1, 10.0, 991);
  const double coarse = quadrature_error(128, r);
  const double fine = quadrature_error(256, r);
  report(7, "closed-form quadrature", fine < 1e-6 && coarse < 1e-6 && coarse / fine >= 4.0,
         fmt("rel err %.3g (h) -> %.3g (h/2), ratio %.1f", coarse, fine, coarse / fine));
}

void energy_partition_and_spin() {
  bool exact = true;
  for (double u : {0.1, 0.3, 0.5, 0.9, 1.0}) {
    const auto p = energy_partition(make_particle(ParticleKind::electron, u, cfg));
    const double half = 0.5 * cfg.m() * u * u;
    exact = exact && p.kinetic == half && p.potential == half && p.total == p.kinetic + p.potential;
  }
  const auto e = spin_parameters(ParticleKind::electron, cfg);
  const auto ph = spin_parameters(ParticleKind::photon, cfg);
  const double err = std::max({std::abs(e.g - 2.0), std::abs(e.s - 0.5 * cfg.hbar()),
                               std::abs(ph.g - 1.0), std::abs(ph.s - cfg.hbar())});
  report(8, "energy partition and spin", exact && err < 1e-12,
         fmt("electron (g,s)=(%.15g, %.15g), ", e.g, e.s) +
             fmt("photon (g,s)=(%.15g, %.15g), max err %.2g", ph.g, ph.s, err));
}

void field_equation_residuals() {
  const auto state = make_particle(ParticleKind::electron, 0.5, cfg);
  std::vector<double> residual;
  for (int level = 0; level < 4; ++level) {
    const double h = state.wavelength / (16.0 * std::pow(2.0, level));
    residual.push_back(verify_field_equations(state, h, cfg).max());
  }
  bool ok = true;
  std::string detail = "orders";
  for (std::size_t i = 1; i < residual.size(); ++i) {
    const double order = std::log2(residual[i - 1] / residual[i]);
    ok = ok && std::abs(order - 2.0) <= 0.1;
    detail += fmt(" %.4f", order);
  }
  report(9, "field-equation residuals", ok, detail);
}

void electrostatic_balance() {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> pos(0.1, 10.0), sym(-5.0, 5.0);

  InteractionSystem sys{1.3, 0.7, {0.0, 0.0, 0.0}, 0.0, 2.0};
  const double H_ref = hamiltonian_first_order(sys, cfg).H;
  bool independent = true;
  for (int i = 0; i < 100; ++i) {
    sys.velocity = {sym(rng), sym(rng), sym(rng)};
    independent = independent && hamiltonian_first_order(sys, cfg).H == H_ref;
  }

  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const PhysicalConfig c(pos(rng), pos(rng), pos(rng), pos(rng), pos(rng), pos(rng));
    const double v[3] = {sym(rng), sym(rng), sym(rng)};
    const auto hw = interaction_hamiltonian(pos(rng), v, c);
    const double lhs = -hw.H_w;
    const double rhs = hw.rho_photon_required * c.c() * c.c();
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
  }

  std::vector<AccelerationStep> history;
  for (int i = 0; i < 20; ++i) {
    const double dk = pos(rng);
    history.push_back({2.0 * dk, dk, dk});
  }
  const bool clean = energy_balance_audit(history).balanced;
  history[7].photon_energy = *history[7].photon_energy * (1.0 + 1e-6);
  const auto tampered = energy_balance_audit(history);
  const bool detected = !tampered.balanced && tampered.violations.size() == 1 &&
                        tampered.violations[0] == 7;

  report(10, "electrostatic balance", independent && worst < 1e-12 && clean && detected,
         std::string(independent ? "H velocity-independent" : "H DEPENDS on velocity") +
             fmt(", identity max rel err %.2g", worst) +
             (detected ? ", 1e-6 perturbation detected" : ", perturbation MISSED"));
}

void self_energy_power_laws() {
  const auto radii = logspace(1e-3, 1e2, 60);
  const auto curve = weisskopf_self_energy(radii, cfg);
  std::vector<double> la, ls, lf;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    la.push_back(std::log(curve.radius[i]));
    ls.push_back(std::log(curve.electrostatic[i]));
    lf.push_back(std::log(curve.fluctuation[i]));
  }
  const double s1 = fit_line(la, ls).slope;
  const double s2 = fit_line(la, lf).slope;
  const double C = 0.37, dE = 0.013;
  const double at_k = bethe_lamb_shift(C, dE, dE);
  const double at_e = bethe_lamb_shift(C, std::numbers::e * dE, dE);
  const bool ok = std::abs(s1 + 1.0) < 1e-6 && std::abs(s2 + 2.0) < 1e-6 &&
                  std::abs(at_k) < 1e-15 && std::abs(at_e - C) < 1e-15;
  report(11, "self-energy power laws", ok,
         fmt("slopes %.10f, %.10f", s1, s2) + fmt(", W(K=dE)=%g, W(K=e dE)-C=%g", at_k, at_e - C));
}

}  // namespace

int main() {
  fixed_point_convergence();
  alpha_vs_gamma();
  bounded_energy();
  phase_linearity();
  angle_independence();
  ensemble_cutoff_and_collapse();
  closed_form_quadrature();
  energy_partition_and_spin();
  field_equation_residuals();
  electrostatic_balance();
  self_energy_power_laws();
  std::printf("%d of 11 criteria failed\n", failures);
  return failures;
}
