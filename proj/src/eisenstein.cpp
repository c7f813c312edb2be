#include "eiskron/eisenstein.hpp"

#include <cmath>
#include <numbers>

#include "eiskron/kernels/lattice_sum.hpp"

namespace eiskron::eisenstein {

QExpansion<CycRat> eis_classical(int k, const LevelFunction<mpq_class>& phi, const GL2ModN& g,
                                 std::size_t q_prec) {
  if (k < 1) throw ParameterError("eis_classical needs k >= 1");
  const auto P = level::p1(level::act_gl2(g, phi));
  const auto& ctx = P.context();
  const CycRat half = CycRat::from_rational(ctx, mpq_class(1, 2));

  const auto term = [&](long long d, long long dp) {
    const mpz_class w = arith::ipow(d, static_cast<unsigned>(k + 1));
    // (-d)^{k+1} = (-1)^{k+1} d^{k+1}
    CycRat t = (k + 1) % 2 == 0 ? P(dp, d) - P(-dp, -d) : P(dp, d) + P(-dp, -d);
    return arith::scale_int(t, w);
  };
  auto c = kernels::divisor_series_omp(q_prec, CycRat(ctx), term);
  for (auto& x : c) x = x * half;

  lfunc::PeriodicFunction<CycRat> F{P.level(), {}};
  for (long long m = 0; m < P.level(); ++m)
    F.values.push_back((k + 1) % 2 == 0 ? P(0, m) - P(0, -m) : P(0, m) + P(0, -m));
  c[0] = lfunc::l_value_neg(F, k + 1) * mpq_class(1, 4);
  return QExpansion<CycRat>(ctx, std::move(c));
}

LatticeClassSums lattice_class_sums(int N, int k, std::complex<double> tau, long long cutoff,
                                    bool complete_rows) {
  if (k < 1) throw ParameterError("lattice sum needs k >= 1 (weight >= 3)");
  if (tau.imag() <= 0) throw ParameterError("tau must lie in the upper half plane");
  if (cutoff < 1) throw ParameterError("cutoff must be positive");
  LatticeClassSums s{N, k + 2, tau, cutoff, complete_rows,
                     kernels::lattice_class_sums_omp(N, k + 2, tau, cutoff)};
  if (complete_rows) {
    const auto tails = kernels::lattice_row_tails(N, k + 2, tau, cutoff);
    for (std::size_t i = 0; i < tails.size(); ++i) s.sums[i] += tails[i];
  }
  return s;
}

std::complex<double> eis_lattice_complex(int k, const LevelFunction<mpq_class>& phi,
                                         const GL2ModN& g, const LatticeClassSums& sums) {
  if (k < 1) throw ParameterError("eis_lattice_complex needs k >= 1");
  if (sums.N != phi.level() || sums.weight != k + 2)
    throw ParameterError("lattice class sums do not match (N, k)");
  const int N = phi.level();
  const int K = k + 2;
  const auto W = level::symplectic_hat(level::act_gl2(g, phi));
  std::complex<double> acc = 0.0;
  for (long long a = 0; a < N; ++a)
    for (long long b = 0; b < N; ++b) {
      const auto& w = W(a, b);
      if (w.is_zero()) continue;
      acc += w.to_complex() * sums.sums[static_cast<std::size_t>(a * N + b)];
    }
  double fact = 1.0;
  for (int i = 2; i <= K - 1; ++i) fact *= i;
  const std::complex<double> two_pi_i(0.0, 2.0 * std::numbers::pi);
  const double sign = K % 2 == 0 ? 1.0 : -1.0;
  const std::complex<double> prefactor =
      sign * std::pow(static_cast<double>(N), K) * fact / (2.0 * std::pow(two_pi_i, K));
  return prefactor * acc;
}

std::complex<double> eis_lattice_complex(int k, const LevelFunction<mpq_class>& phi,
                                         const GL2ModN& g, std::complex<double> tau,
                                         long long cutoff) {
  return eis_lattice_complex(k, phi, g, lattice_class_sums(phi.level(), k, tau, cutoff));
}

std::complex<double> evaluate(const QExpansion<CycRat>& a, std::complex<double> q) {
  std::complex<double> acc = 0.0;
  std::complex<double> qn = 1.0;
  for (std::size_t n = 0; n <= a.q_prec(); ++n) {
    acc += a[n].to_complex() * qn;
    qn *= q;
  }
  return acc;
}

std::complex<double> cusp_parameter(std::complex<double> tau, int N) {
  return std::exp(std::complex<double>(0.0, 2.0 * std::numbers::pi) * tau /
                  static_cast<double>(N));
}

}  // namespace eiskron::eisenstein
