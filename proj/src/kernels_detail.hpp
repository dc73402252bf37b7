#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>

namespace extel::kernels::detail {

inline void check_sizes(std::size_t nodes, std::size_t weights, std::size_t targets,
                        std::size_t out) {
  if (nodes != weights || targets != out) {
    throw std::invalid_argument("kernel: mismatched span sizes");
  }
}

inline std::complex<double> fourier_point(std::span<const double> nodes,
                                          std::span<const std::complex<double>> weights,
                                          double target, int sign) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double arg = static_cast<double>(sign) * nodes[j] * target;
    const double c = std::cos(arg);
    const double s = std::sin(arg);
    re += weights[j].real() * c - weights[j].imag() * s;
    im += weights[j].real() * s + weights[j].imag() * c;
  }
  return {re, im};
}

inline std::complex<double> radial_point(std::span<const double> nodes,
                                         std::span<const std::complex<double>> weights,
                                         double target) {
  constexpr double four_pi = 4.0 * std::numbers::pi;
  double re = 0.0;
  double im = 0.0;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const double x = nodes[j] * target;
    const double sinc = x == 0.0 ? 1.0 : std::sin(x) / x;
    const double f = four_pi * nodes[j] * nodes[j] * sinc;
    re += weights[j].real() * f;
    im += weights[j].imag() * f;
  }
  return {re, im};
}

}  // namespace extel::kernels::detail
