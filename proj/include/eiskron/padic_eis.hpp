#pragma once

#include <optional>

#include "eiskron/measure.hpp"

namespace eiskron::padic_eis {

using arith::PadicCyc;
using arith::u64;
using level::GL2ModN;
using level::LevelFunction;
using qexp::QExpansion;

/// Parameters of E^(p)_{k+2,r,phi}(g).
struct PadicEisSpec {
  int k;
  long long r;
  LevelFunction<mpq_class> phi;
  GL2ModN g;
  u64 p;
  std::size_t q_prec;
  int p_prec;
};

/// E^(p)_{k+2,r,phi}(g) = Phi^(p)_{k+1,r,P1(hat(g phi))}: the unit moment of
/// mu_N^{k+1} against P1(hat(g phi)). Requires k > 0, p > k+2.
QExpansion<PadicCyc> eis_p(const PadicEisSpec& spec);

/// The same unit-filtered divisor sum for an arbitrary first index w >= 1,
/// bypassing the measure's k > 0 gate: coefficient of q^n is
///   (1/2) sum_{dd'=n, p not | d'} (d^{w-1} d'^r F(d,d') - (-d)^{w-1} (-d')^r F(-d,-d')),
/// F = P1(hat(g phi)). For w = k+2 with k > 0 this is eis_p.
QExpansion<PadicCyc> eisenstein_kronecker(int w, long long r, const LevelFunction<mpq_class>& phi,
                                          const GL2ModN& g, u64 p, std::size_t q_prec, int p_prec);

struct ShiftReport {
  bool holds;
  std::optional<std::size_t> first_mismatch;
};

/// theta E^(p)_{k+2,r} == E^(p)_{k+3,r+1}; needs p > k+3.
ShiftReport check_theta_shift(const PadicEisSpec& spec);

struct OneMinusPhiReport {
  bool series_match;
  std::optional<std::size_t> first_mismatch;
  /// sigma(P1 f)(m,n) == P1 f(pm, n) for f = g phi, all (m,n)
  bool sigma_shift_match;
  bool holds() const { return series_match && sigma_shift_match; }
};

/// E^(p)_{k+2,0,phi} == (1 - phi*) E_{k+2,0,phi} and the sigma-Fourier shift.
OneMinusPhiReport check_one_minus_phistar(int k, const LevelFunction<mpq_class>& phi,
                                          const GL2ModN& g, u64 p, std::size_t q_prec,
                                          int p_prec);

/// sigma(P1 f)(m,n) == P1 f(pm, n) for a rational f.
bool sigma_fourier_shift_holds(const LevelFunction<mpq_class>& f, long long p);

}  // namespace eiskron::padic_eis
