#pragma once

#include <numeric>
#include <random>

#include "eiskron/level.hpp"

namespace eiskron::testing {

using arith::CycRat;
using arith::PadicCyc;
using level::GL2ModN;
using level::LevelFunction;

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline long long uniform(long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

/// num/den with |num| <= 9, den in [1, 6].
inline mpq_class random_rational() {
  return arith::rat(uniform(-9, 9), uniform(1, 6));
}

/// Rational values whose denominators avoid p.
inline mpq_class random_p_integral(long long p) {
  long long den;
  do den = uniform(1, 12); while (den % p == 0);
  return arith::rat(uniform(-40, 40), den);
}

inline LevelFunction<mpq_class> random_phi(int N) {
  LevelFunction<mpq_class> f(N, {});
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) f(a, b) = uniform(0, 2) == 0 ? mpq_class(0) : random_rational();
  return f;
}

inline LevelFunction<mpq_class> random_p_integral_phi(int N, long long p) {
  LevelFunction<mpq_class> f(N, {});
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) f(a, b) = random_p_integral(p);
  return f;
}

inline CycRat random_cyc(int N) {
  auto F = arith::CyclotomicField::get(N);
  std::vector<mpq_class> c;
  for (int i = 0; i < F->degree(); ++i) c.push_back(random_rational());
  return CycRat(F, c);
}

inline PadicCyc random_padic(int N, arith::u64 p, int M) {
  auto F = arith::CyclotomicField::get(N);
  PadicCyc x(F, p, M);
  for (int i = 0; i < F->degree(); ++i)
    x += PadicCyc::zeta(F, p, M, i) * uniform(0, static_cast<long long>(arith::ipow_checked(p, M)) - 1);
  return x;
}

/// Z[zeta_N]/p^M-valued function with random integral coefficients.
inline LevelFunction<PadicCyc> random_padic_function(int N, arith::u64 p, int M) {
  auto F = arith::CyclotomicField::get(N);
  LevelFunction<PadicCyc> f(N, {F, p, M});
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) f(a, b) = random_padic(N, p, M);
  return f;
}

inline GL2ModN random_gl2(int N) {
  for (;;) {
    const long long a = uniform(0, N - 1), b = uniform(0, N - 1), c = uniform(0, N - 1),
                    d = uniform(0, N - 1);
    if (std::gcd(arith::floor_mod(a * d - b * c, N), static_cast<long long>(N)) == 1)
      return GL2ModN::make(N, a, b, c, d);
  }
}

}  // namespace eiskron::testing
