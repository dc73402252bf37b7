#include "extel/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>

#include "extel/errors.hpp"
#include "extel/numerics.hpp"

namespace extel {

namespace {

void require_positive(double value, const char* name) {
  if (!std::isfinite(value) || !(value > 0.0)) {
    throw DomainError(std::string("physical constant '") + name +
                      "' must be finite and > 0, got " + format_double(value));
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

PhysicalConfig::PhysicalConfig(double mass, double light_speed, double hbar, double charge,
                               double sigma_bar, double rho_bar)
    : m_(mass), c_(light_speed), hbar_(hbar), e_(charge), sigma_bar_(sigma_bar),
      rho_bar_(rho_bar) {
  require_positive(m_, "m");
  require_positive(c_, "c");
  require_positive(hbar_, "hbar");
  require_positive(e_, "e");
  require_positive(sigma_bar_, "sigma_bar");
  require_positive(rho_bar_, "rho_bar");
}

double PhysicalConfig::h() const noexcept { return 2.0 * std::numbers::pi * hbar_; }

PhysicalConfig natural_units() { return PhysicalConfig(1.0, 1.0, 1.0, 1.0, 1.0, 1.0); }

PhysicalConfig si_units() {
  constexpr double electron_mass = 9.1093837015e-31;
  constexpr double light_speed = 299792458.0;
  constexpr double hbar = 1.054571817e-34;
  constexpr double charge = 1.602176634e-19;
  return PhysicalConfig(electron_mass, light_speed, hbar, charge, charge, 1.0);
}

std::string to_config_text(const PhysicalConfig& config) {
  std::ostringstream out;
  out << "m = " << format_double(config.m()) << '\n'
      << "c = " << format_double(config.c()) << '\n'
      << "hbar = " << format_double(config.hbar()) << '\n'
      << "e = " << format_double(config.e()) << '\n'
      << "sigma_bar = " << format_double(config.sigma_bar()) << '\n'
      << "rho_bar = " << format_double(config.rho_bar()) << '\n';
  return out.str();
}

PhysicalConfig parse_config_text(std::string_view text) {
  std::map<std::string, double, std::less<>> values;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    static constexpr std::string_view known[] = {"m", "c", "hbar", "h", "e", "sigma_bar",
                                                 "rho_bar"};
    bool is_known = false;
    for (auto k : known) is_known = is_known || k == key;
    if (!is_known) {
      throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    const auto value = parse_double(line.substr(eq + 1));
    if (!value) {
      throw ConfigError("config line " + std::to_string(line_no) + ": cannot parse value for '" +
                        key + "'");
    }
    if (!values.emplace(key, *value).second) {
      throw ConfigError("config line " + std::to_string(line_no) + ": duplicate key '" + key +
                        "'");
    }
  }
  if (values.contains("h") && values.contains("hbar")) {
    throw ConfigError("config: give either 'h' or 'hbar', not both");
  }

  auto get = [&](const char* key) {
    auto it = values.find(key);
    return it == values.end() ? 1.0 : it->second;
  };
  double hbar = get("hbar");
  if (auto it = values.find("h"); it != values.end()) hbar = it->second / (2.0 * std::numbers::pi);
  try {
    return PhysicalConfig(get("m"), get("c"), hbar, get("e"), get("sigma_bar"), get("rho_bar"));
  } catch (const DomainError& err) {
    throw ConfigError(std::string("config: ") + err.what());
  }
}

PhysicalConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace extel
