#include "extel/numerics.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

#include "extel/errors.hpp"

namespace extel {

std::string format_double(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) {
    throw std::runtime_error("format_double: buffer too small");
  }
  return std::string(buf, end);
}

std::optional<double> parse_double(std::string_view text) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t')) text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' || text.back() == '\r')) {
    text.remove_suffix(1);
  }
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;
  return value;
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DomainError("fit_line: need at least two (x, y) pairs of equal length");
  }
  const auto n = static_cast<double>(x.size());
  double mean_x = 0.0;
  double mean_y = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= n;
  mean_y /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mean_x;
    sxx += dx * dx;
    sxy += dx * (y[i] - mean_y);
  }
  if (sxx == 0.0) throw DomainError("fit_line: x values are all equal");

  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mean_y - fit.slope * mean_x;
  double ss = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (fit.slope * x[i] + fit.intercept);
    ss += r * r;
  }
  fit.rms_residual = std::sqrt(ss / n);
  return fit;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count < 2) throw DomainError("linspace: count must be >= 2");
  std::vector<double> out(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = lo + step * static_cast<double>(i);
  out.back() = hi;
  return out;
}

std::vector<double> logspace(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0) || !(hi > 0.0)) throw DomainError("logspace: bounds must be > 0");
  auto exponents = linspace(std::log(lo), std::log(hi), count);
  for (auto& v : exponents) v = std::exp(v);
  exponents.front() = lo;
  exponents.back() = hi;
  return exponents;
}

std::vector<double> trapezoid_weights(double lo, double hi, std::size_t panels) {
  if (panels < 1) throw DomainError("trapezoid_weights: need at least one panel");
  const double h = (hi - lo) / static_cast<double>(panels);
  std::vector<double> w(panels + 1, h);
  w.front() = 0.5 * h;
  w.back() = 0.5 * h;
  return w;
}

std::vector<double> simpson_weights(double lo, double hi, std::size_t panels) {
  if (panels < 2 || panels % 2 != 0) {
    throw DomainError("simpson_weights: panel count must be even and >= 2");
  }
  const double h = (hi - lo) / static_cast<double>(panels);
  std::vector<double> w(panels + 1);
  for (std::size_t i = 0; i <= panels; ++i) {
    if (i == 0 || i == panels) {
      w[i] = h / 3.0;
    } else {
      w[i] = (i % 2 == 1 ? 4.0 : 2.0) * h / 3.0;
    }
  }
  return w;
}

}  // namespace extel
