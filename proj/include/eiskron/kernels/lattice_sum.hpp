#pragma once

#include <complex>
#include <vector>

namespace eiskron::kernels {

/// Residue-class lattice sums
///   S[a*N + b] = sum_{|m|,|n| <= cutoff, (m,n) != 0, m=a, n=b mod N} (m + n tau)^{-K}.
std::vector<std::complex<double>> lattice_class_sums_serial(int N, int K, std::complex<double> tau,
                                                            long long cutoff);

/// Row-parallel version; rows are reduced in a fixed order.
std::vector<std::complex<double>> lattice_class_sums_omp(int N, int K, std::complex<double> tau,
                                                         long long cutoff);

/// The part of each row missing from the square: for |n| <= cutoff,
///   T[a*N + b] = sum_{|m| > cutoff, m=a, n=b mod N} (m + n tau)^{-K},
/// evaluated per row by the Euler-Maclaurin expansion of the Hurwitz zeta
/// function at complex argument. K >= 3.
std::vector<std::complex<double>> lattice_row_tails(int N, int K, std::complex<double> tau,
                                                    long long cutoff);

}  // namespace eiskron::kernels
