#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "eiskron/eisenstein.hpp"

namespace eiskron::measure {

using arith::PadicCyc;
using arith::u64;
using level::LevelFunction;
using qexp::QExpansion;

/// A continuous function Z_p -> Z[zeta_N]/p^M, sampled on residues
/// y in [0, p^M). Negative integers are passed as their residue.
using TestFunction = std::function<PadicCyc(u64 y)>;

struct IntegralityRecord {
  int r;
  bool pass;
  /// min valuation of the q-coefficients of sum_m c(m,r) 2 Phi^(p)_{k+1,m,f}
  int min_valuation;
  std::optional<std::size_t> first_failing_q_power;
};

/// The measure mu_N^{k+1} on Z_p x (Z/N)^2, represented through its
/// q-expansion moments. Construction enforces p odd prime, p not dividing N,
/// p > k + 2, k > 0, N >= 3.
class EisensteinMeasure {
 public:
  EisensteinMeasure(u64 p, int N, int k, std::size_t q_prec, int p_prec);

  u64 prime() const { return p_; }
  int level() const { return N_; }
  int weight_parameter() const { return k_; }
  std::size_t q_prec() const { return Q_; }
  int p_prec() const { return M_; }

  /// Moment int y^r f dmu = 2 Phi^(p)_{k+1,r,f}
  ///   = 2 (Phi_{k+1,r,f} - p^r Frob Phi_{k+1,r,f(u,pv)}), r >= 0.
  QExpansion<PadicCyc> moment(int r, const LevelFunction<PadicCyc>& f) const;

  /// Integral of psi(y) f(u,v); returns 2 * integral unless `measure_normalized`.
  QExpansion<PadicCyc> integrate(const TestFunction& psi, const LevelFunction<PadicCyc>& f,
                                 bool measure_normalized = false) const;

  /// Phi^(p)_{k+1,r,f} = (1/2) int_{Z_p^x} y^r f dmu for any integer r.
  QExpansion<PadicCyc> unit_moment(long long r, const LevelFunction<PadicCyc>& f) const;

  /// Integrality criterion on the binomial moments binom(y, r), r <= r_max.
  std::vector<IntegralityRecord> integrality_check(int r_max,
                                                   const LevelFunction<PadicCyc>& f) const;

  /// Same as integrate(psi = y^r), built from the generic test-function path.
  static TestFunction power_function(const PadicCyc& unit, int r);
  TestFunction indicator_pZp(const PadicCyc& unit) const;

 private:
  void check_function(const LevelFunction<PadicCyc>& f) const;

  u64 p_;
  int N_;
  int k_;
  std::size_t Q_;
  int M_;
};

/// (1/2) sum_{dd'=n, p not | d'} (d^e d'^r f(d,d') - (-d)^e (-d')^r f(-d,-d'))
/// with negative powers of d' inverted mod p^M. e >= 0, r any integer.
QExpansion<PadicCyc> unit_divisor_series(int d_exponent, long long r,
                                         const LevelFunction<PadicCyc>& f, u64 p,
                                         std::size_t q_prec);

/// Signed Stirling numbers of the first kind: y(y-1)...(y-r+1) = sum_m s(r,m) y^m.
std::vector<long long> falling_factorial_coefficients(int r);

}  // namespace eiskron::measure
