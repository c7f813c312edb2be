#include "eiskron/measure.hpp"

#include <string>

namespace eiskron::measure {

using arith::RingTraits;

EisensteinMeasure::EisensteinMeasure(u64 p, int N, int k, std::size_t q_prec, int p_prec)
    : p_(p), N_(N), k_(k), Q_(q_prec), M_(p_prec) {
  if (N < 3) throw ParameterError("level N must be >= 3");
  if (k < 1) throw ParameterError("the measure needs k > 0");
  arith::validate_padic_parameters(N, p, p_prec);
  if (p <= static_cast<u64>(k + 2)) throw ParameterError("need p > k + 2");
  if (q_prec < 1) throw ParameterError("q-precision must be >= 1");
}

void EisensteinMeasure::check_function(const LevelFunction<PadicCyc>& f) const {
  const auto& ctx = f.context();
  if (f.level() != N_ || ctx.p != p_)
    throw ParameterError("level function does not match the measure (N, p)");
}

QExpansion<PadicCyc> EisensteinMeasure::moment(int r, const LevelFunction<PadicCyc>& f) const {
  if (r < 0) throw ParameterError("moment needs r >= 0; use unit_moment for r < 0");
  check_function(f);
  const auto fp = f.second_scaled(static_cast<long long>(p_));
  auto phi = eisenstein::detail::katz_nonconstant(k_ + 1, r, f, Q_);
  auto phi_p = eisenstein::detail::katz_nonconstant(k_ + 1, r, fp, Q_);
  const mpz_class pr = arith::ipow(static_cast<long long>(p_), static_cast<unsigned>(r));
  auto diff = phi - qexp::frob_q(phi_p, static_cast<long long>(p_)).map([&](const PadicCyc& x) {
    return arith::scale_int(x, pr);
  });
  if (r == 0) {
    // both constants are L-values of the same function m -> f(m, 0) = f(m, p*0),
    // so take the L-value of their difference
    LevelFunction<PadicCyc> delta = f;
    for (long long a = 0; a < N_; ++a) delta(a, 0) = f(a, 0) - fp(a, 0);
    diff[0] = eisenstein::katz_constant_term(delta, k_ + 1);
  }
  return diff.scaled(2LL);
}

QExpansion<PadicCyc> EisensteinMeasure::integrate(const TestFunction& psi,
                                                  const LevelFunction<PadicCyc>& f,
                                                  bool measure_normalized) const {
  check_function(f);
  const auto& ctx = f.context();
  const u64 mod = arith::ipow_checked(p_, M_);
  const auto sample = [&](long long y) { return psi(arith::reduce_signed(y, mod)); };
  const int e = k_ + 1;
  const auto term = [&](long long d, long long dp) {
    const mpz_class w = arith::ipow(d, static_cast<unsigned>(e));
    PadicCyc t = sample(dp) * f(d, dp);
    PadicCyc u = sample(-dp) * f(-d, -dp);
    // (-d)^e = (-1)^e d^e
    t = e % 2 == 0 ? t - u : t + u;
    return arith::scale_int(t, w);
  };
  const PadicCyc zero = RingTraits<PadicCyc>::zero(ctx);
  auto full = kernels::divisor_series_omp(Q_, zero, term);
  // second sum: index m = p * n, over n = d d', with (d, p d')
  const auto term_p = [&](long long d, long long dp) { return term(d, static_cast<long long>(p_) * dp); };
  auto inner = kernels::divisor_series_omp(Q_ / p_, zero, term_p);
  for (std::size_t n = 1; n < inner.size(); ++n) full[n * p_] -= inner[n];
  QExpansion<PadicCyc> out(ctx, std::move(full));
  if (measure_normalized)
    out = out.map([&](const PadicCyc& x) { return x * RingTraits<PadicCyc>::from_rational(ctx, mpq_class(1, 2)); });
  return out;
}

QExpansion<PadicCyc> unit_divisor_series(int d_exponent, long long r,
                                         const LevelFunction<PadicCyc>& f, u64 p,
                                         std::size_t q_prec) {
  if (d_exponent < 0) throw ParameterError("d exponent must be >= 0");
  const auto& ctx = f.context();
  const u64 mod = arith::ipow_checked(p, ctx.precision);
  const bool neg_even = ((d_exponent + r) % 2 + 2) % 2 == 0;
  const auto term = [&](long long d, long long dp) {
    if (dp % static_cast<long long>(p) == 0) return RingTraits<PadicCyc>::zero(ctx);
    u64 dp_pow;
    if (r >= 0)
      dp_pow = arith::powmod(static_cast<u64>(dp), static_cast<u64>(r), mod);
    else
      dp_pow = arith::powmod(arith::invert_mod(dp, p, ctx.precision), static_cast<u64>(-r), mod);
    const u64 w = arith::mulmod(arith::powmod(static_cast<u64>(d), static_cast<u64>(d_exponent), mod),
                                dp_pow, mod);
    PadicCyc t = neg_even ? f(d, dp) - f(-d, -dp) : f(d, dp) + f(-d, -dp);
    return t.scaled(w);
  };
  auto c = kernels::divisor_series_omp(q_prec, RingTraits<PadicCyc>::zero(ctx), term);
  const PadicCyc half = RingTraits<PadicCyc>::from_rational(ctx, mpq_class(1, 2));
  for (auto& x : c) x = x * half;
  return QExpansion<PadicCyc>(ctx, std::move(c));
}

QExpansion<PadicCyc> EisensteinMeasure::unit_moment(long long r,
                                                    const LevelFunction<PadicCyc>& f) const {
  check_function(f);
  return unit_divisor_series(k_ + 1, r, f, p_, Q_);
}

std::vector<long long> falling_factorial_coefficients(int r) {
  std::vector<long long> c{1};
  for (int j = 0; j < r; ++j) {
    // multiply by (y - j)
    std::vector<long long> next(c.size() + 1, 0);
    for (std::size_t m = 0; m < c.size(); ++m) {
      next[m + 1] += c[m];
      next[m] -= static_cast<long long>(j) * c[m];
    }
    c = std::move(next);
  }
  return c;
}

std::vector<IntegralityRecord> EisensteinMeasure::integrality_check(
    int r_max, const LevelFunction<PadicCyc>& f) const {
  check_function(f);
  std::vector<QExpansion<PadicCyc>> moments;
  for (int m = 0; m <= r_max; ++m) moments.push_back(moment(m, f));

  std::vector<IntegralityRecord> out;
  long long fact = 1;
  for (int r = 0; r <= r_max; ++r) {
    if (r > 0) fact *= r;
    const int need = arith::valuation(static_cast<u64>(fact), p_, 64);
    if (need >= M_)
      throw PrecisionError("p-adic precision too small to test r = " + std::to_string(r));
    const auto s = falling_factorial_coefficients(r);
    QExpansion<PadicCyc> acc(f.context(), Q_);
    for (int m = 0; m <= r; ++m)
      if (s[m] != 0) acc += moments[m].map([&](const PadicCyc& x) { return x * s[m]; });
    IntegralityRecord rec{r, true, M_ - need, std::nullopt};
    for (std::size_t n = 0; n <= Q_; ++n) {
      const int v = acc[n].valuation();
      rec.min_valuation = std::min(rec.min_valuation, v - need);
      if (v < need && !rec.first_failing_q_power) {
        rec.pass = false;
        rec.first_failing_q_power = n;
      }
    }
    out.push_back(rec);
  }
  return out;
}

TestFunction EisensteinMeasure::power_function(const PadicCyc& unit, int r) {
  return [unit, r](u64 y) {
    return unit.scaled(arith::powmod(y, static_cast<u64>(r), unit.modulus()));
  };
}

TestFunction EisensteinMeasure::indicator_pZp(const PadicCyc& unit) const {
  const u64 p = p_;
  return [unit, p](u64 y) { return y % p == 0 ? unit : unit.zero_like(); };
}

}  // namespace eiskron::measure
