#pragma once

#include <complex>
#include <vector>

#include "eiskron/kernels/divisor_series.hpp"
#include "eiskron/level.hpp"
#include "eiskron/lfunc.hpp"
#include "eiskron/qexp.hpp"

namespace eiskron::eisenstein {

using arith::CycRat;
using arith::RingTraits;
using level::GL2ModN;
using level::LevelFunction;
using qexp::QExpansion;

namespace detail {

inline void check_katz_range(int k, int r) {
  if (!((r == 0 && k >= 2) || (r >= 1 && k >= 1)))
    throw ParameterError("katz_phi needs (r = 0, k >= 2) or (r >= 1, k >= 1)");
}

/// q^n coefficient (n >= 1) of Phi_{k,r,f}:
///   (1/2) sum_{dd'=n} (d^k d'^r f(d,d') - (-d)^k (-d')^r f(-d,-d')).
template <class R>
QExpansion<R> katz_nonconstant(int k, int r, const LevelFunction<R>& f, std::size_t q_prec) {
  const auto& ctx = f.context();
  const R half = RingTraits<R>::from_rational(ctx, mpq_class(1, 2));
  const auto term = [&](long long d, long long dp) {
    const mpz_class w = arith::ipow(d, static_cast<unsigned>(k)) *
                        arith::ipow(dp, static_cast<unsigned>(r));
    const bool neg_even = (k + r) % 2 == 0;  // (-d)^k (-d')^r = (-1)^{k+r} d^k d'^r
    R t = f(d, dp);
    if (neg_even)
      t -= f(-d, -dp);
    else
      t += f(-d, -dp);
    return arith::scale_int(t, w);
  };
  auto c = kernels::divisor_series_omp(q_prec, RingTraits<R>::zero(ctx), term);
  for (auto& x : c) x = x * half;
  return QExpansion<R>(ctx, std::move(c));
}

}  // namespace detail

/// Constant term of Phi_{k,0,f}: (1/4) L(-k, f(m,0) - (-1)^k f(-m,0)),
/// which equals (1/2) L(f(.,0), -k) for k >= 1.
template <class R>
R katz_constant_term(const LevelFunction<R>& f, int k) {
  lfunc::PeriodicFunction<R> F{f.level(), {}};
  for (long long m = 0; m < f.level(); ++m) {
    R v = f(m, 0);
    if (k % 2 == 0)
      v -= f(-m, 0);
    else
      v += f(-m, 0);
    F.values.push_back(std::move(v));
  }
  return lfunc::l_value_neg(F, k) * RingTraits<R>::from_rational(f.context(), mpq_class(1, 4));
}

/// Katz's p-adic modular form Phi_{k,r,f} as a truncated q-expansion.
/// Valid for (r = 0, k >= 2) or (r >= 1, k >= 1); the constant term is
/// present only for r = 0.
template <class R>
QExpansion<R> katz_phi(int k, int r, const LevelFunction<R>& f, std::size_t q_prec) {
  detail::check_katz_range(k, r);
  auto series = detail::katz_nonconstant(k, r, f, q_prec);
  if (r == 0) series[0] = katz_constant_term(f, k);
  return series;
}

/// E_{k+2,0,phi} on the component g, k >= 1, computed from the q-expansion
/// in terms of P1(g phi):
///   const (1/4) L(-1-k, P1(g phi)(0,m) - (-1)^{k+1} P1(g phi)(0,-m)),
///   q^n   (1/2) sum_{dd'=n} (d^{k+1} P1(g phi)(d',d) - (-d)^{k+1} P1(g phi)(-d',-d)).
QExpansion<CycRat> eis_classical(int k, const LevelFunction<mpq_class>& phi, const GL2ModN& g,
                                 std::size_t q_prec);

/// Residue-class lattice sums for weight K = k+2 at tau, reusable across phi.
struct LatticeClassSums {
  int N;
  int weight;
  std::complex<double> tau;
  long long cutoff;
  /// rows |n| <= cutoff summed over all m instead of |m| <= cutoff
  bool complete_rows;
  std::vector<std::complex<double>> sums;
};

/// The square |m|, |n| <= cutoff; with `complete_rows` the m-tails of every
/// row are added analytically, which removes the O(cutoff^{-2}) truncation
/// error of the square (what is left is exponentially small in cutoff).
LatticeClassSums lattice_class_sums(int N, int k, std::complex<double> tau, long long cutoff,
                                    bool complete_rows = false);

/// ((-1)^{k+2} N^{k+2} (k+1)! / (2 (2 pi i)^{k+2})) sum' hat(g phi)(m,n) / (m + n tau)^{k+2}
/// over the region described by `sums`, with zeta_N -> exp(2 pi i / N).
std::complex<double> eis_lattice_complex(int k, const LevelFunction<mpq_class>& phi,
                                         const GL2ModN& g, const LatticeClassSums& sums);
std::complex<double> eis_lattice_complex(int k, const LevelFunction<mpq_class>& phi,
                                         const GL2ModN& g, std::complex<double> tau,
                                         long long cutoff);

/// sum_n a_n q^n with the coefficients mapped by zeta_N -> exp(2 pi i / N).
std::complex<double> evaluate(const QExpansion<CycRat>& a, std::complex<double> q);

/// q = exp(2 pi i tau / N), the cusp parameter on level N.
std::complex<double> cusp_parameter(std::complex<double> tau, int N);

}  // namespace eiskron::eisenstein
