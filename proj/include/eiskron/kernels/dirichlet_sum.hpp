#pragma once

#include <complex>
#include <span>

namespace eiskron::kernels {

/// sum_{m=1}^{terms} f(m mod N) / m^k, straightforward ascending loop.
std::complex<double> dirichlet_partial_sum_serial(std::span<const std::complex<double>> f, int k,
                                                  long long terms);

/// Same sum split into a fixed number of blocks reduced in block order, so
/// the result does not depend on the thread count.
std::complex<double> dirichlet_partial_sum_omp(std::span<const std::complex<double>> f, int k,
                                               long long terms);

}  // namespace eiskron::kernels
