#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace extel {

/// Shortest decimal string that parses back to the same double.
std::string format_double(double value);

/// Whole-string parse ignoring surrounding blanks; nullopt on trailing
/// garbage or empty input.
std::optional<double> parse_double(std::string_view text);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  /// Root-mean-square of the residuals y - (slope*x + intercept).
  double rms_residual = 0.0;
};

/// Ordinary least squares. Requires at least two distinct x values.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

/// Evenly spaced points on [lo, hi], both ends included. count >= 2.
std::vector<double> linspace(double lo, double hi, std::size_t count);

/// Log-spaced points on [lo, hi], lo > 0.
std::vector<double> logspace(double lo, double hi, std::size_t count);

/// Composite trapezoid weights for `panels` equal panels on [lo, hi].
std::vector<double> trapezoid_weights(double lo, double hi, std::size_t panels);

/// Composite Simpson weights; `panels` must be even.
std::vector<double> simpson_weights(double lo, double hi, std::size_t panels);

}  // namespace extel
