#include <algorithm>
#include <vector>

#include "eiskron/kernels/dirichlet_sum.hpp"
#include "eiskron/kernels/lattice_sum.hpp"

#ifdef EISKRON_HAVE_OPENMP
#include <omp.h>
#endif

namespace eiskron::kernels {

namespace {

inline double inv_pow(double m, int k) {
  double x = 1.0 / m;
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

inline std::complex<double> inv_cpow(std::complex<double> z, int K) {
  std::complex<double> w = 1.0 / z;
  std::complex<double> r = 1.0;
  for (int i = 0; i < K; ++i) r *= w;
  return r;
}

constexpr long long kBlocks = 256;

// sum_{j >= 0} (j + z)^{-s} for Re z large; even Bernoulli numbers B_2..B_12.
std::complex<double> hurwitz_tail(int s, std::complex<double> z) {
  static constexpr double kB2j[] = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730};
  const std::complex<double> w = 1.0 / z;
  std::complex<double> zs = inv_cpow(z, s);  // z^{-s}
  std::complex<double> r = zs * z / static_cast<double>(s - 1) + 0.5 * zs;
  double rising = s;  // s (s+1) ... (s+2j-2)
  double fact = 2.0;  // (2j)!
  std::complex<double> zp = zs * w;  // z^{-s-2j+1}
  for (int j = 1; j <= 6; ++j) {
    r += kB2j[j - 1] / fact * rising * zp;
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    fact *= (2 * j + 1) * (2 * j + 2);
    zp *= w * w;
  }
  return r;
}

}  // namespace

std::complex<double> dirichlet_partial_sum_serial(std::span<const std::complex<double>> f, int k,
                                                  long long terms) {
  const long long N = static_cast<long long>(f.size());
  std::complex<double> s = 0.0;
  for (long long m = 1; m <= terms; ++m) s += f[m % N] * inv_pow(static_cast<double>(m), k);
  return s;
}

std::complex<double> dirichlet_partial_sum_omp(std::span<const std::complex<double>> f, int k,
                                               long long terms) {
  const long long N = static_cast<long long>(f.size());
  std::vector<std::complex<double>> partial(kBlocks, 0.0);
  const long long chunk = (terms + kBlocks - 1) / kBlocks;
#pragma omp parallel for schedule(static)
  for (long long blk = 0; blk < kBlocks; ++blk) {
    const long long lo = blk * chunk + 1;
    const long long hi = std::min(terms, (blk + 1) * chunk);
    std::complex<double> s = 0.0;
    for (long long m = lo; m <= hi; ++m) s += f[m % N] * inv_pow(static_cast<double>(m), k);
    partial[blk] = s;
  }
  std::complex<double> total = 0.0;
  for (const auto& s : partial) total += s;
  return total;
}

std::vector<std::complex<double>> lattice_class_sums_serial(int N, int K, std::complex<double> tau,
                                                            long long cutoff) {
  std::vector<std::complex<double>> S(static_cast<std::size_t>(N) * N, 0.0);
  for (long long n = -cutoff; n <= cutoff; ++n) {
    const long long b = ((n % N) + N) % N;
    for (long long m = -cutoff; m <= cutoff; ++m) {
      if (m == 0 && n == 0) continue;
      const long long a = ((m % N) + N) % N;
      S[a * N + b] += inv_cpow(static_cast<double>(m) + static_cast<double>(n) * tau, K);
    }
  }
  return S;
}

std::vector<std::complex<double>> lattice_class_sums_omp(int N, int K, std::complex<double> tau,
                                                         long long cutoff) {
  const long long rows = 2 * cutoff + 1;
  std::vector<std::complex<double>> row_sums(static_cast<std::size_t>(rows) * N, 0.0);
#pragma omp parallel for schedule(dynamic, 16)
  for (long long r = 0; r < rows; ++r) {
    const long long n = r - cutoff;
    std::complex<double>* out = &row_sums[static_cast<std::size_t>(r) * N];
    for (long long m = -cutoff; m <= cutoff; ++m) {
      if (m == 0 && n == 0) continue;
      const long long a = ((m % N) + N) % N;
      out[a] += inv_cpow(static_cast<double>(m) + static_cast<double>(n) * tau, K);
    }
  }
  std::vector<std::complex<double>> S(static_cast<std::size_t>(N) * N, 0.0);
  for (long long r = 0; r < rows; ++r) {
    const long long b = (((r - cutoff) % N) + N) % N;
    for (long long a = 0; a < N; ++a) S[a * N + b] += row_sums[static_cast<std::size_t>(r) * N + a];
  }
  return S;
}

std::vector<std::complex<double>> lattice_row_tails(int N, int K, std::complex<double> tau,
                                                    long long cutoff) {
  std::vector<std::complex<double>> T(static_cast<std::size_t>(N) * N, 0.0);
  const double scale = inv_pow(static_cast<double>(N), K);
  const double sign = K % 2 == 0 ? 1.0 : -1.0;
  const auto first_above = [&](long long a) { return cutoff + 1 + ((a - cutoff - 1) % N + N) % N; };
  for (long long n = -cutoff; n <= cutoff; ++n) {
    const long long b = ((n % N) + N) % N;
    const std::complex<double> shift = static_cast<double>(n) * tau;
    for (long long a = 0; a < N; ++a) {
      // m > cutoff, m = a; and m = -m' with m' > cutoff, m' = -a
      const double up = static_cast<double>(first_above(a));
      const double down = static_cast<double>(first_above(-a));
      T[a * N + b] += scale * (hurwitz_tail(K, (up + shift) / static_cast<double>(N)) +
                               sign * hurwitz_tail(K, (down - shift) / static_cast<double>(N)));
    }
  }
  return T;
}

}  // namespace eiskron::kernels
