#pragma once

#include <cstddef>
#include <vector>

#ifdef EISKRON_HAVE_OPENMP
#include <omp.h>
#endif

namespace eiskron::kernels {

// Both kernels fill c[0..q_prec] with c[0] = zero and
//   c[n] = sum over ordered factorizations n = d * d' of term(d, d').
// `term` must be a pure function; the ring must be exact, so the two
// summation orders give identical results.

/// Reference: sieve over pairs (d, d') with d * d' <= q_prec.
template <class R, class Term>
std::vector<R> divisor_series_serial(std::size_t q_prec, const R& zero, Term&& term) {
  std::vector<R> c(q_prec + 1, zero);
  for (long long d = 1; d <= static_cast<long long>(q_prec); ++d)
    for (long long dp = 1; d * dp <= static_cast<long long>(q_prec); ++dp)
      c[static_cast<std::size_t>(d * dp)] += term(d, dp);
  return c;
}

/// One independent task per q-power n.
template <class R, class Term>
std::vector<R> divisor_series_omp(std::size_t q_prec, const R& zero, Term&& term) {
  std::vector<R> c(q_prec + 1, zero);
  const long long Q = static_cast<long long>(q_prec);
#pragma omp parallel for schedule(dynamic, 4)
  for (long long n = 1; n <= Q; ++n) {
    R acc = zero;
    for (long long d = 1; d <= n; ++d)
      if (n % d == 0) acc += term(d, n / d);
    c[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return c;
}

}  // namespace eiskron::kernels
