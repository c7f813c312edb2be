#pragma once

#include <gmpxx.h>

#include <complex>
#include <vector>

#include "eiskron/arith/ring.hpp"
#include "eiskron/level.hpp"

namespace eiskron::lfunc {

using arith::RingTraits;

mpq_class bernoulli_number(int k);

/// k-th Bernoulli polynomial, coefficients in ascending order of degree.
std::vector<mpq_class> bernoulli_poly(int k);

mpq_class eval_poly(const std::vector<mpq_class>& coeffs, const mpq_class& x);

/// A function Z/N -> R.
template <class R>
struct PeriodicFunction {
  int N;
  std::vector<R> values;

  const R& operator()(long long m) const {
    return values[static_cast<std::size_t>(arith::floor_mod(m, N))];
  }
};

/// m -> phi(0, m): the restriction along which L-series of functions on
/// (Z/N)^2 are taken.
template <class R>
PeriodicFunction<R> second_coordinate(const level::LevelFunction<R>& phi) {
  PeriodicFunction<R> f{phi.level(), {}};
  for (long long m = 0; m < phi.level(); ++m) f.values.push_back(phi(0, m));
  return f;
}

/// L(f, -k) = -(N^k/(k+1)) sum_{a=1}^{N} f(a) B_{k+1}(a/N), k >= 0.
///
/// Summing over a = 1..N (rather than 0..N-1) is the Hurwitz-zeta form; the
/// two agree except at k = 0, where only this one gives zeta(0) = -1/2.
template <class R>
R l_value_neg(const PeriodicFunction<R>& f, int k) {
  if (k < 0) throw ParameterError("l_value_neg needs k >= 0");
  const auto ctx = RingTraits<R>::context(f.values.at(0));
  const auto bk = bernoulli_poly(k + 1);
  R acc = RingTraits<R>::zero(ctx);
  for (long long a = 1; a <= f.N; ++a) {
    const R& v = f(a);
    if (RingTraits<R>::is_zero(v)) continue;
    acc += v * RingTraits<R>::from_rational(ctx, eval_poly(bk, arith::rat(a, f.N)));
  }
  mpz_class nk = arith::ipow(f.N, static_cast<unsigned>(k));
  return acc * RingTraits<R>::from_rational(ctx, arith::rat(-nk, mpz_class(k + 1)));
}

struct ComplexLValue {
  std::complex<double> value;
  /// Size of the analytic tail correction that was added to the partial sum.
  double tail_estimate;
  long long terms;
};

/// L(f, k) = sum_{m>=1} f(m mod N)/m^k for k >= 2: direct summation of
/// `terms` terms plus an Euler-Maclaurin evaluation of the remaining
/// Hurwitz tails. Throws ParameterError for k < 2.
ComplexLValue l_value_complex(const std::vector<std::complex<double>>& f, int k,
                              long long terms = 1'000'000);

/// (N^k/(k!(k+2))) sum_t phi(g^{-1} t) B_{k+2}(t_2/N), t_2/N in [0,1).
mpq_class horospherical_bernoulli(const level::LevelFunction<mpq_class>& phi, int k,
                                  const level::GL2ModN& g);

/// (-1/(N k!)) L(P1(g phi), -k-1), the L-series read along m -> P1(g phi)(0, m).
mpq_class horospherical_lvalue(const level::LevelFunction<mpq_class>& phi, int k,
                               const level::GL2ModN& g);

/// Horospherical map rho^k(phi)(g). Evaluates both expressions and throws
/// std::logic_error if they disagree.
mpq_class horospherical(const level::LevelFunction<mpq_class>& phi, int k,
                        const level::GL2ModN& g);

/// -N^{1-k} rho^k(phi)(g): residue of the de Rham Eisenstein class.
mpq_class residue_de_rham(const level::LevelFunction<mpq_class>& phi, int k,
                          const level::GL2ModN& g);

}  // namespace eiskron::lfunc
