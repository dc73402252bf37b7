#include "extel/kernels.hpp"

#include "kernels_detail.hpp"

namespace extel::kernels {

void fourier_sum_serial(std::span<const double> nodes, std::span<const std::complex<double>> weights,
                        std::span<const double> targets, int sign,
                        std::span<std::complex<double>> out) {
  detail::check_sizes(nodes.size(), weights.size(), targets.size(), out.size());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    out[t] = detail::fourier_point(nodes, weights, targets[t], sign);
  }
}

void radial_sum_serial(std::span<const double> nodes, std::span<const std::complex<double>> weights,
                       std::span<const double> targets, std::span<std::complex<double>> out) {
  detail::check_sizes(nodes.size(), weights.size(), targets.size(), out.size());
  for (std::size_t t = 0; t < targets.size(); ++t) {
    out[t] = detail::radial_point(nodes, weights, targets[t]);
  }
}

void fourier_sum(Backend backend, std::span<const double> nodes,
                 std::span<const std::complex<double>> weights, std::span<const double> targets,
                 int sign, std::span<std::complex<double>> out) {
  if (backend == Backend::openmp) {
    fourier_sum_omp(nodes, weights, targets, sign, out);
  } else {
    fourier_sum_serial(nodes, weights, targets, sign, out);
  }
}

void radial_sum(Backend backend, std::span<const double> nodes,
                std::span<const std::complex<double>> weights, std::span<const double> targets,
                std::span<std::complex<double>> out) {
  if (backend == Backend::openmp) {
    radial_sum_omp(nodes, weights, targets, out);
  } else {
    radial_sum_serial(nodes, weights, targets, out);
  }
}

}  // namespace extel::kernels
