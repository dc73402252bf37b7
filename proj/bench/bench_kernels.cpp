#include <chrono>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "extel/kernels.hpp"
#include "extel/numerics.hpp"

using extel::kernels::Backend;

namespace {

template <class F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

double max_diff(const std::vector<std::complex<double>>& a, const std::vector<std::complex<double>>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t nodes_n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 2049;
  const std::size_t targets_n = argc > 2 ? std::strtoul(argv[2], nullptr, 10) : 4097;
  const int repeats = 5;

  const auto nodes = extel::linspace(0.0, 1.0, nodes_n);
  const auto targets = extel::linspace(-40.0, 40.0, targets_n);
  std::vector<std::complex<double>> weights(nodes_n);
  for (std::size_t j = 0; j < nodes_n; ++j) weights[j] = {1.0 / nodes_n, 0.5 / (j + 1)};

  std::vector<std::complex<double>> serial(targets_n), parallel(targets_n);

  std::printf("threads=%d nodes=%zu targets=%zu\n", extel::kernels::max_threads(), nodes_n, targets_n);
  std::printf("%-8s %12s %12s %8s %10s\n", "kernel", "serial_s", "openmp_s", "speedup", "max_diff");

  const double fs = best_of(repeats, [&] {
    extel::kernels::fourier_sum(Backend::serial, nodes, weights, targets, 1, serial);
  });
  const double fp = best_of(repeats, [&] {
    extel::kernels::fourier_sum(Backend::openmp, nodes, weights, targets, 1, parallel);
  });
  std::printf("%-8s %12.6f %12.6f %8.2f %10.3g\n", "fourier", fs, fp, fs / fp, max_diff(serial, parallel));

  const double rs = best_of(repeats, [&] {
    extel::kernels::radial_sum(Backend::serial, nodes, weights, targets, serial);
  });
  const double rp = best_of(repeats, [&] {
    extel::kernels::radial_sum(Backend::openmp, nodes, weights, targets, parallel);
  });
  std::printf("%-8s %12.6f %12.6f %8.2f %10.3g\n", "radial", rs, rp, rs / rp, max_diff(serial, parallel));
  return 0;
}
