#include "extel/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include "kernels_detail.hpp"

namespace extel::kernels {

void fourier_sum_omp(std::span<const double> nodes, std::span<const std::complex<double>> weights,
                     std::span<const double> targets, int sign,
                     std::span<std::complex<double>> out) {
  detail::check_sizes(nodes.size(), weights.size(), targets.size(), out.size());
  const auto n = static_cast<std::ptrdiff_t>(targets.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t t = 0; t < n; ++t) {
    const auto i = static_cast<std::size_t>(t);
    out[i] = detail::fourier_point(nodes, weights, targets[i], sign);
  }
}

void radial_sum_omp(std::span<const double> nodes, std::span<const std::complex<double>> weights,
                    std::span<const double> targets, std::span<std::complex<double>> out) {
  detail::check_sizes(nodes.size(), weights.size(), targets.size(), out.size());
  const auto n = static_cast<std::ptrdiff_t>(targets.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t t = 0; t < n; ++t) {
    const auto i = static_cast<std::size_t>(t);
    out[i] = detail::radial_point(nodes, weights, targets[i]);
  }
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace extel::kernels
