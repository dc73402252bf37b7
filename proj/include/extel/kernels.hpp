#pragma once

#include <complex>
#include <span>

namespace extel::kernels {

enum class Backend { serial, openmp };

/// out[t] = sum_j weights[j] * exp(sign * i * nodes[j] * targets[t])
///
/// Each output element is an independent, fixed-order sum over j, so both
/// backends give the same result for every thread count.
void fourier_sum_serial(std::span<const double> nodes, std::span<const std::complex<double>> weights,
                        std::span<const double> targets, int sign,
                        std::span<std::complex<double>> out);
void fourier_sum_omp(std::span<const double> nodes, std::span<const std::complex<double>> weights,
                     std::span<const double> targets, int sign,
                     std::span<std::complex<double>> out);

/// out[t] = sum_j weights[j] * 4 pi nodes[j]^2 * sinc(nodes[j] * targets[t])
/// with sinc(x) = sin(x)/x, sinc(0) = 1. Radial reduction of the 3D transform.
void radial_sum_serial(std::span<const double> nodes, std::span<const std::complex<double>> weights,
                       std::span<const double> targets, std::span<std::complex<double>> out);
void radial_sum_omp(std::span<const double> nodes, std::span<const std::complex<double>> weights,
                    std::span<const double> targets, std::span<std::complex<double>> out);

void fourier_sum(Backend backend, std::span<const double> nodes,
                 std::span<const std::complex<double>> weights, std::span<const double> targets,
                 int sign, std::span<std::complex<double>> out);
void radial_sum(Backend backend, std::span<const double> nodes,
                std::span<const std::complex<double>> weights, std::span<const double> targets,
                std::span<std::complex<double>> out);

/// Threads OpenMP would use; 1 when built without OpenMP.
int max_threads();

}  // namespace extel::kernels
