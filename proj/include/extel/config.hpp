#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace extel {

/// Unit system shared by every module.
///
/// All constants are strictly positive. The quantum of action h is not stored;
/// it is always derived as 2*pi*hbar so the two can never disagree.
class PhysicalConfig {
 public:
  /// Throws DomainError unless every argument is finite and > 0.
  PhysicalConfig(double mass, double light_speed, double hbar, double charge,
                 double sigma_bar, double rho_bar);

  double m() const noexcept { return m_; }
  double c() const noexcept { return c_; }
  double hbar() const noexcept { return hbar_; }
  double h() const noexcept;
  double e() const noexcept { return e_; }
  /// Dimensional constant coupling mechanical and electromagnetic units.
  double sigma_bar() const noexcept { return sigma_bar_; }
  /// Reference mean density used by the interferometric phase.
  double rho_bar() const noexcept { return rho_bar_; }

  double rest_energy() const noexcept { return m_ * c_ * c_; }

  friend bool operator==(const PhysicalConfig&, const PhysicalConfig&) = default;

 private:
  double m_;
  double c_;
  double hbar_;
  double e_;
  double sigma_bar_;
  double rho_bar_;
};

/// m = c = hbar = e = sigma_bar = rho_bar = 1.
PhysicalConfig natural_units();

/// Electron in SI units. sigma_bar is set equal to e.
PhysicalConfig si_units();

/// `key = value` lines, shortest round-trip formatting.
std::string to_config_text(const PhysicalConfig& config);

/// Parses `key = value` lines on top of natural units. Blank lines and lines
/// starting with '#' are skipped. Accepted keys: m, c, hbar, h, e, sigma_bar,
/// rho_bar. Unknown keys, duplicate keys and unparsable values throw
/// ConfigError, as do values the constructor rejects. Giving both hbar and h
/// is an error.
PhysicalConfig parse_config_text(std::string_view text);

PhysicalConfig load_config_file(const std::filesystem::path& path);

}  // namespace extel
