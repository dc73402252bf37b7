#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "extel/absorption.hpp"
#include "extel/config.hpp"
#include "extel/electrostatic.hpp"
#include "extel/ensemble.hpp"
#include "extel/errors.hpp"
#include "extel/intrinsic_wave.hpp"
#include "extel/magnetic.hpp"
#include "extel/numerics.hpp"
#include "extel/table.hpp"

namespace extel::cli {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string name;
  std::string content;
};

struct Emission {
  json parameters = json::object();
  std::vector<Output> outputs;
};

struct GlobalOptions {
  std::string config_path;
  std::string out_dir;
  std::string format = "csv";
};

std::string table_text(const Table& table, const std::string& format) {
  return format == "json" ? to_json(table) : to_csv(table);
}

std::string table_name(const std::string& stem, const std::string& format) {
  return stem + (format == "json" ? ".json" : ".csv");
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json config_json(const PhysicalConfig& c) {
  return json{{"m", c.m()},         {"c", c.c()},
              {"hbar", c.hbar()},   {"h", c.h()},
              {"e", c.e()},         {"sigma_bar", c.sigma_bar()},
              {"rho_bar", c.rho_bar()}};
}

fs::path resolve_out_dir(const GlobalOptions& global) {
  if (!global.out_dir.empty()) return global.out_dir;
  if (const char* env = std::getenv(kOutDirEnv); env && *env) return env;
  return ".";
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
  file << content;
  if (!file) throw IoError("failed writing '" + path.string() + "'");
}

void emit(const std::string& subcommand, const GlobalOptions& global,
          const PhysicalConfig& config, const Emission& emission, std::ostream& out) {
  const fs::path dir = resolve_out_dir(global);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());

  json manifest;
  manifest["tool"] = "extel";
  manifest["version"] = kVersion;
  manifest["subcommand"] = subcommand;
  manifest["parameters"] = emission.parameters;
  manifest["config_source"] = global.config_path.empty() ? "natural-units" : global.config_path;
  manifest["config"] = config_json(config);
  manifest["format"] = global.format;
  manifest["outputs"] = json::array();
  for (const auto& o : emission.outputs) manifest["outputs"].push_back(o.name);
  manifest["timestamp"] = utc_timestamp();

  for (const auto& o : emission.outputs) {
    write_file(dir / o.name, o.content);
    out << (dir / o.name).string() << '\n';
  }
  const fs::path manifest_path = dir / (subcommand + ".manifest.json");
  write_file(manifest_path, manifest.dump(2) + "\n");
  out << manifest_path.string() << '\n';
}

// ---------------------------------------------------------------------------
// Subcommands

struct FieldOptions {
  std::string kind = "electron";
  double u = 0.5;
  double t = 0.0;
  double x_min = 0.0;
  std::optional<double> x_max;
  std::size_t points = 65;
};

Emission run_fields(const FieldOptions& o, const PhysicalConfig& config, const std::string& format) {
  const auto state = make_particle(parse_particle_kind(o.kind), o.u, config);
  const double x_max = o.x_max.value_or(o.x_min + state.wavelength);
  Table table{{"x", "rho", "E", "B", "phi"}, {}};
  for (double x : linspace(o.x_min, x_max, o.points)) {
    const auto f = sample_intrinsic_fields(state, x, o.t, config);
    table.add_row({x, f.rho, f.E[1], f.B[2], f.phi});
  }
  Emission e;
  e.parameters = {{"kind", o.kind}, {"u", state.u}, {"t", o.t}, {"x_min", o.x_min},
                  {"x_max", x_max}, {"points", o.points}};
  e.outputs.push_back({table_name("fields", format), table_text(table, format)});
  return e;
}

Emission run_spin(const FieldOptions& o, const PhysicalConfig& config, const std::string& format) {
  const auto state = make_particle(parse_particle_kind(o.kind), o.u, config);
  const double x_max = o.x_max.value_or(o.x_min + state.wavelength);
  Table table{{"x", "spin"}, {}};
  for (double x : linspace(o.x_min, x_max, o.points)) {
    table.add_row({x, spin_orientation(state, x, config)});
  }
  Emission e;
  e.parameters = {{"kind", o.kind}, {"u", state.u}, {"x_min", o.x_min}, {"x_max", x_max},
                  {"points", o.points}};
  e.outputs.push_back({table_name("spin", format), table_text(table, format)});
  return e;
}

struct ElectrostaticOptions {
  std::string history;
  double tolerance = 1e-12;
};

std::vector<AccelerationStep> read_history(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open history file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& err) {
    throw UsageError("history file '" + path + "' is not valid JSON: " + err.what());
  }
  const json& steps = doc.is_array() ? doc : doc.value("steps", json::array());
  if (!steps.is_array()) throw UsageError("history file: 'steps' must be an array");
  std::vector<AccelerationStep> out;
  try {
    for (const auto& s : steps) {
      if (!s.is_object() || !s.contains("delta_kinetic")) {
        throw UsageError("history file: every step needs 'delta_kinetic'");
      }
      AccelerationStep step;
      step.phi_step = s.value("phi_step", 0.0);
      step.delta_kinetic = s.at("delta_kinetic").get<double>();
      if (s.contains("photon_energy") && !s.at("photon_energy").is_null()) {
        step.photon_energy = s.at("photon_energy").get<double>();
      }
      out.push_back(step);
    }
  } catch (const json::type_error& err) {
    throw UsageError("history file: step values must be numbers: " + std::string(err.what()));
  }
  return out;
}

Emission run_electrostatic(const ElectrostaticOptions& o) {
  const auto history = read_history(o.history);
  const auto report = energy_balance_audit(history, o.tolerance);

  json doc;
  doc["balanced"] = report.balanced;
  doc["tolerance"] = report.tolerance;
  doc["total_phi_step"] = report.total_phi_step;
  doc["total_kinetic"] = report.total_kinetic;
  doc["total_emitted"] = report.total_emitted;
  doc["filtered_null_steps"] = report.filtered_null_steps;
  doc["violations"] = report.violations;
  doc["steps"] = json::array();
  for (const auto& s : report.steps) {
    doc["steps"].push_back({{"index", s.index},
                            {"phi_step", s.phi_step},
                            {"delta_kinetic", s.delta_kinetic},
                            {"required_emission", s.required_emission},
                            {"emitted", s.emitted},
                            {"relative_error", s.relative_error},
                            {"balanced", s.balanced}});
  }
  Emission e;
  e.parameters = {{"history", o.history}, {"tolerance", o.tolerance}};
  e.outputs.push_back({"electrostatic.json", doc.dump(2) + "\n"});
  return e;
}

struct PhaseOptions {
  double l = 1.0;
  std::optional<double> lambda;
  double u = 1.0;
  std::optional<double> rho_bar;
  std::optional<double> B;
  double B_min = 0.0;
  double B_max = 1.0;
  std::size_t B_steps = 50;
};

Emission run_phase(const PhaseOptions& o, const PhysicalConfig& config, const std::string& format) {
  const double lambda =
      o.lambda.value_or(make_particle(ParticleKind::electron, o.u, config).wavelength);
  const double rho_bar = o.rho_bar.value_or(config.rho_bar());
  Table table{{"B", "raw", "alpha", "n"}, {}};
  std::vector<double> Bs = o.B ? std::vector<double>{*o.B} : linspace(o.B_min, o.B_max, o.B_steps);
  for (double B : Bs) {
    const auto p = phase_difference(o.l, lambda, o.u, rho_bar, B);
    table.add_row({B, p.raw, p.alpha, static_cast<double>(p.n)});
  }
  Emission e;
  e.parameters = {{"l", o.l}, {"lambda", lambda}, {"u", o.u}, {"rho_bar", rho_bar}};
  if (o.B) {
    e.parameters["B"] = *o.B;
  } else {
    e.parameters["B_min"] = o.B_min;
    e.parameters["B_max"] = o.B_max;
    e.parameters["B_steps"] = o.B_steps;
  }
  e.outputs.push_back({table_name("phase", format), table_text(table, format)});
  return e;
}

struct EnsembleOptions {
  double total_energy = 1.0;
  std::string profile = "uniform";
  double gauss_center = 0.5;
  double gauss_width = 0.2;
  std::string dim = "line";
  std::size_t grid = 256;
  std::vector<double> potentials;
  double V_rfa = 0.0;
  double domain_min = -20.0;
  double domain_max = 20.0;
  std::size_t r_points = 401;
  std::optional<double> exclude_min;
  std::optional<double> exclude_max;
};

Table k_table(const QuantumEnsemble& ensemble) {
  Table table{{"k", "psi0_sq"}, {}};
  if (ensemble.empty()) return table;
  for (double k : k_quadrature(ensemble).nodes) {
    table.add_row({k, std::norm(amplitude_at(ensemble, k))});
  }
  return table;
}

Emission run_ensemble(const EnsembleOptions& o, const PhysicalConfig& config,
                      const std::string& format) {
  AmplitudeProfile profile = UniformProfile{};
  if (o.profile == "gaussian") profile = GaussianProfile{o.gauss_center, o.gauss_width};
  const auto dim = o.dim == "radial3d" ? EnsembleDimension::radial3d : EnsembleDimension::line;
  const PositionDomain domain{o.domain_min, o.domain_max};

  auto ensemble = normalize(build_free_ensemble(o.total_energy, profile, o.grid, config, dim), domain);
  const auto initial = ensemble;
  json report;
  report["k0_initial"] = initial.k0;
  report["energy_expectation_initial"] = energy_expectation(initial, config);

  json steps = json::array();
  for (double V : o.potentials) {
    ensemble = apply_potential(ensemble, V, config);
    steps.push_back({{"V", V}, {"k0", ensemble.k0}, {"total_energy", ensemble.total_energy}});
  }
  report["potential_steps"] = steps;

  if (o.V_rfa > 0.0) {
    ensemble = retarding_field_collapse(ensemble, o.V_rfa, config);
    report["collapse"] = {{"V_rfa", o.V_rfa},
                          {"transmission", ensemble.transmission},
                          {"blocked", ensemble.blocked}};
  }
  report["support"] = json::array();
  for (const auto& iv : ensemble.support) report["support"].push_back({iv.lo, iv.hi});
  report["k0_final"] = ensemble.k0;
  report["energy_expectation_final"] =
      ensemble.empty() ? json(nullptr) : json(energy_expectation(ensemble, config));

  if (o.exclude_min.has_value() != o.exclude_max.has_value()) {
    throw UsageError("--exclude-min and --exclude-max must be given together");
  }
  if (o.exclude_min) {
    auto conditioned = interaction_free_condition(ensemble, {*o.exclude_min, *o.exclude_max},
                                                  domain, config);
    ensemble = std::move(conditioned.ensemble);
    const auto& r = conditioned.report;
    report["conditioning"] = {{"excluded", {*o.exclude_min, *o.exclude_max}},
                              {"energy_before", r.energy_before},
                              {"energy_after", r.energy_after},
                              {"delta_energy", r.delta_energy},
                              {"excluded_weight", r.excluded_weight},
                              {"statistical_only", r.statistical_only}};
  }

  const auto r_grid = linspace(o.domain_min, o.domain_max, o.r_points);
  const auto wf = evaluate_wavefunction(ensemble, r_grid);
  Table position{{"r", "re_psi", "im_psi", "abs2_psi"}, {}};
  for (std::size_t i = 0; i < r_grid.size(); ++i) {
    position.add_row({r_grid[i], wf.psi[i].real(), wf.psi[i].imag(), std::norm(wf.psi[i])});
  }
  if (!wf.warning.empty()) report["warning"] = wf.warning;

  Emission e;
  e.parameters = {{"E_T", o.total_energy}, {"profile", o.profile},  {"dim", o.dim},
                  {"grid", o.grid},        {"V", o.potentials},     {"V_rfa", o.V_rfa},
                  {"domain", {o.domain_min, o.domain_max}},         {"r_points", o.r_points}};
  if (o.profile == "gaussian") {
    e.parameters["gauss_center"] = o.gauss_center;
    e.parameters["gauss_width"] = o.gauss_width;
  }
  if (o.exclude_min) e.parameters["exclude"] = {*o.exclude_min, *o.exclude_max};
  e.outputs.push_back({table_name("ensemble_k_before", format), table_text(k_table(initial), format)});
  e.outputs.push_back({table_name("ensemble_k_after", format), table_text(k_table(ensemble), format)});
  e.outputs.push_back({table_name("ensemble_r", format), table_text(position, format)});
  e.outputs.push_back({"ensemble_report.json", report.dump(2) + "\n"});
  return e;
}

struct AbsorbOptions {
  double quantum = 0.0;
  std::optional<double> tol;
  std::size_t n_max = 10'000'000;
};

Emission run_absorb(const AbsorbOptions& o, const PhysicalConfig& config, const std::string& format) {
  const double tol = o.tol.value_or(1e-10 * config.rest_energy());
  const auto trace = absorption_sequence(o.quantum, o.n_max, tol, config);
  Table table{{"n", "E_n", "u_n", "alpha_n"}, {}};
  for (const auto& row : trace.rows) {
    table.add_row({static_cast<double>(row.n), row.energy, row.u, row.alpha});
  }
  Emission e;
  e.parameters = {{"hw0", o.quantum}, {"tol", tol}, {"n_max", o.n_max},
                  {"converged", trace.converged}, {"E_limit", trace.energy_limit}};
  e.outputs.push_back({table_name("absorb", format), table_text(table, format)});
  return e;
}

struct AlphaGammaOptions {
  double quantum = 1e-4;
  double threshold = 0.10;
};

Emission run_alpha_gamma(const AlphaGammaOptions& o, const PhysicalConfig& config,
                         const std::string& format) {
  const auto table = alpha_gamma_table(o.quantum, config, o.threshold);
  Table out{{"u_over_c", "alpha", "gamma", "rel_dev"}, {}};
  for (const auto& r : table.rows) out.add_row({r.beta, r.alpha, r.gamma, r.deviation});

  Table curves{{"u_over_c", "E_interaction", "E_interaction_rest", "E_SR"}, {}};
  for (const auto& r : energy_comparison_curves(o.quantum, config)) {
    curves.add_row({r.beta, r.interaction, r.interaction_with_rest, r.special_relativity});
  }
  Emission e;
  e.parameters = {{"hw0", o.quantum},
                  {"threshold", o.threshold},
                  {"max_rel_dev", table.max_deviation},
                  {"within_threshold", table.within_threshold}};
  e.outputs.push_back({table_name("alpha_gamma", format), table_text(out, format)});
  e.outputs.push_back({table_name("energy_curves", format), table_text(curves, format)});
  return e;
}

struct SelfEnergyOptions {
  double a_min = 0.01;
  double a_max = 1.0;
  std::size_t a_points = 50;
};

Emission run_selfenergy(const SelfEnergyOptions& o, const PhysicalConfig& config,
                        const std::string& format) {
  if (!(o.a_min > 0.0) || !(o.a_max > 0.0)) {
    throw DomainError("self-energy radius must be > 0");
  }
  const auto radii = o.a_points == 1 ? std::vector<double>{o.a_min} : logspace(o.a_min, o.a_max, o.a_points);
  const auto curve = weisskopf_self_energy(radii, config);
  Table table{{"a", "W_st", "W_fluct"}, {}};
  for (std::size_t i = 0; i < curve.radius.size(); ++i) {
    table.add_row({curve.radius[i], curve.electrostatic[i], curve.fluctuation[i]});
  }
  Emission e;
  e.parameters = {{"a_min", o.a_min}, {"a_max", o.a_max}, {"a_points", o.a_points}};
  e.outputs.push_back({table_name("selfenergy", format), table_text(table, format)});
  return e;
}

struct LambShiftOptions {
  double C = 1.0;
  std::optional<double> K;
  double dE = 0.0;
};

Emission run_lambshift(const LambShiftOptions& o, const PhysicalConfig& config) {
  const double K = o.K.value_or(config.rest_energy());
  const double W = bethe_lamb_shift(o.C, K, o.dE);
  json doc{{"C", o.C}, {"K", K}, {"dE_avg", o.dE}, {"W_ns", W}};
  Emission e;
  e.parameters = {{"C", o.C}, {"K", K}, {"dE_avg", o.dE}};
  e.outputs.push_back({"lambshift.json", doc.dump(2) + "\n"});
  return e;
}

int fail(std::ostream& err, int code, const char* kind, const std::string& message) {
  err << json{{"error", kind}, {"exit_code", code}, {"message", message}}.dump() << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extended-electron numerical laboratory", "extel"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  GlobalOptions global;
  app.add_option("--config", global.config_path, "key = value file with physical constants");
  app.add_option("--out", global.out_dir, "output directory (default: $EXTEL_OUT_DIR or .)");
  app.add_option("--format", global.format, "table format")
      ->check(CLI::IsMember({"csv", "json"}));

  std::function<Emission(const PhysicalConfig&)> action;
  std::string chosen;

  FieldOptions fields;
  auto* fields_cmd = app.add_subcommand("fields", "intrinsic fields: x, rho, E, B, phi");
  FieldOptions spin;
  auto* spin_cmd = app.add_subcommand("spin", "spin orientation along x");
  for (auto [cmd, opts] : {std::pair{fields_cmd, &fields}, std::pair{spin_cmd, &spin}}) {
    cmd->add_option("--kind", opts->kind)->check(CLI::IsMember({"electron", "photon"}));
    cmd->add_option("--u", opts->u, "propagation speed");
    cmd->add_option("--x-min", opts->x_min);
    cmd->add_option("--x-max", opts->x_max, "default: one wavelength after --x-min");
    cmd->add_option("--points", opts->points)->check(CLI::Range(2, 10'000'000));
  }
  fields_cmd->add_option("--t", fields.t, "time");

  ElectrostaticOptions electro;
  auto* electro_cmd = app.add_subcommand("electrostatic", "energy-balance audit of a step history");
  electro_cmd->add_option("--history", electro.history, "JSON file with steps")->required();
  electro_cmd->add_option("--tolerance", electro.tolerance, "relative tolerance");

  PhaseOptions phase;
  auto* phase_cmd = app.add_subcommand("phase", "interferometric phase vs external field");
  phase_cmd->add_option("--l", phase.l, "path length in the field");
  phase_cmd->add_option("--lambda", phase.lambda, "beam wavelength (default: electron at --u)");
  phase_cmd->add_option("--u", phase.u, "beam speed");
  phase_cmd->add_option("--rho-bar", phase.rho_bar, "mean density (default: config)");
  auto* single_B = phase_cmd->add_option("--B", phase.B, "single field value");
  phase_cmd->add_option("--B-min", phase.B_min)->excludes(single_B);
  phase_cmd->add_option("--B-max", phase.B_max)->excludes(single_B);
  phase_cmd->add_option("--B-steps", phase.B_steps)->excludes(single_B)->check(CLI::Range(2, 10'000'000));

  EnsembleOptions ens;
  auto* ens_cmd = app.add_subcommand("ensemble", "k-space ensemble, potentials, collapse");
  ens_cmd->add_option("--ET", ens.total_energy, "total energy");
  ens_cmd->add_option("--profile", ens.profile)->check(CLI::IsMember({"uniform", "gaussian"}));
  ens_cmd->add_option("--gauss-center", ens.gauss_center, "centre as a fraction of k0");
  ens_cmd->add_option("--gauss-width", ens.gauss_width, "width as a fraction of k0");
  ens_cmd->add_option("--dim", ens.dim)->check(CLI::IsMember({"line", "radial3d"}));
  ens_cmd->add_option("--grid", ens.grid, "k panels per support interval (>= 64)");
  ens_cmd->add_option("--V", ens.potentials, "potential steps, applied in order")->allow_extra_args(false);
  ens_cmd->add_option("--V-rfa", ens.V_rfa, "retarding field analyzer potential");
  ens_cmd->add_option("--domain-min", ens.domain_min);
  ens_cmd->add_option("--domain-max", ens.domain_max);
  ens_cmd->add_option("--r-points", ens.r_points)->check(CLI::Range(3, 10'000'000));
  ens_cmd->add_option("--exclude-min", ens.exclude_min, "interaction-free region start");
  ens_cmd->add_option("--exclude-max", ens.exclude_max, "interaction-free region end");

  AbsorbOptions absorb;
  auto* absorb_cmd = app.add_subcommand("absorb", "photon-absorption recursion trace");
  absorb_cmd->add_option("--hw0", absorb.quantum, "photon quantum hbar*omega0")->required();
  absorb_cmd->add_option("--tol", absorb.tol, "stop once the increment drops below this");
  absorb_cmd->add_option("--n-max", absorb.n_max)->check(CLI::PositiveNumber);

  AlphaGammaOptions ag;
  auto* ag_cmd = app.add_subcommand("alpha-gamma", "virtual mass factor against gamma");
  ag_cmd->add_option("--hw0", ag.quantum, "photon quantum hbar*omega0");
  ag_cmd->add_option("--threshold", ag.threshold, "relative deviation regarded as insignificant");

  SelfEnergyOptions se;
  auto* se_cmd = app.add_subcommand("selfenergy", "electrostatic and fluctuation self-energies");
  se_cmd->add_option("--a-min", se.a_min);
  se_cmd->add_option("--a-max", se.a_max);
  se_cmd->add_option("--a-points", se.a_points)->check(CLI::PositiveNumber);

  LambShiftOptions ls;
  auto* ls_cmd = app.add_subcommand("lambshift", "logarithmic Lamb-shift cutoff formula");
  ls_cmd->add_option("--C", ls.C, "prefactor");
  ls_cmd->add_option("--K", ls.K, "cutoff (default m c^2)");
  ls_cmd->add_option("--dE", ls.dE, "average level spacing")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail(err, kUsage, "usage", e.what());
  }

  const auto format = global.format;
  if (*fields_cmd) {
    chosen = "fields";
    action = [&](const PhysicalConfig& c) { return run_fields(fields, c, format); };
  } else if (*spin_cmd) {
    chosen = "spin";
    action = [&](const PhysicalConfig& c) { return run_spin(spin, c, format); };
  } else if (*electro_cmd) {
    chosen = "electrostatic";
    action = [&](const PhysicalConfig&) { return run_electrostatic(electro); };
  } else if (*phase_cmd) {
    chosen = "phase";
    action = [&](const PhysicalConfig& c) { return run_phase(phase, c, format); };
  } else if (*ens_cmd) {
    chosen = "ensemble";
    action = [&](const PhysicalConfig& c) { return run_ensemble(ens, c, format); };
  } else if (*absorb_cmd) {
    chosen = "absorb";
    action = [&](const PhysicalConfig& c) { return run_absorb(absorb, c, format); };
  } else if (*ag_cmd) {
    chosen = "alpha-gamma";
    action = [&](const PhysicalConfig& c) { return run_alpha_gamma(ag, c, format); };
  } else if (*se_cmd) {
    chosen = "selfenergy";
    action = [&](const PhysicalConfig& c) { return run_selfenergy(se, c, format); };
  } else {
    chosen = "lambshift";
    action = [&](const PhysicalConfig& c) { return run_lambshift(ls, c); };
  }

  try {
    const PhysicalConfig config =
        global.config_path.empty() ? natural_units() : load_config_file(global.config_path);
    emit(chosen, global, config, action(config), out);
    return kOk;
  } catch (const UsageError& e) {
    return fail(err, kUsage, "usage", e.what());
  } catch (const ConfigError& e) {
    return fail(err, kUsage, "config", e.what());
  } catch (const DomainError& e) {
    return fail(err, kDomain, "domain", e.what());
  } catch (const IoError& e) {
    return fail(err, kIo, "io", e.what());
  } catch (const std::exception& e) {
    return fail(err, kUnexpected, "internal", e.what());
  }
}

}  // namespace extel::cli
