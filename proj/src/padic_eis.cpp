#include "eiskron/padic_eis.hpp"

namespace eiskron::padic_eis {

namespace {

LevelFunction<PadicCyc> padic_katz_datum(const LevelFunction<mpq_class>& phi, const GL2ModN& g,
                                         u64 p, int p_prec) {
  return level::embed(level::katz_datum(phi, g), p, p_prec);
}

template <class A, class B>
std::optional<std::size_t> first_difference(const A& a, const B& b) {
  const std::size_t q = std::min(a.q_prec(), b.q_prec());
  for (std::size_t n = 0; n <= q; ++n)
    if (!(a[n] == b[n])) return n;
  return std::nullopt;
}

}  // namespace

QExpansion<PadicCyc> eis_p(const PadicEisSpec& spec) {
  measure::EisensteinMeasure mu(spec.p, spec.phi.level(), spec.k, spec.q_prec, spec.p_prec);
  return mu.unit_moment(spec.r, padic_katz_datum(spec.phi, spec.g, spec.p, spec.p_prec));
}

QExpansion<PadicCyc> eisenstein_kronecker(int w, long long r, const LevelFunction<mpq_class>& phi,
                                          const GL2ModN& g, u64 p, std::size_t q_prec, int p_prec) {
  if (w < 1) throw ParameterError("first index must be >= 1");
  arith::validate_padic_parameters(phi.level(), p, p_prec);
  return measure::unit_divisor_series(w - 1, r, padic_katz_datum(phi, g, p, p_prec), p, q_prec);
}

ShiftReport check_theta_shift(const PadicEisSpec& spec) {
  PadicEisSpec next = spec;
  next.k += 1;
  next.r += 1;
  const auto lhs = qexp::theta(eis_p(spec));
  const auto rhs = eis_p(next);
  const auto bad = first_difference(lhs, rhs);
  return {!bad.has_value(), bad};
}

bool sigma_fourier_shift_holds(const LevelFunction<mpq_class>& f, long long p) {
  const auto P = level::p1(f);
  for (long long m = 0; m < f.level(); ++m)
    for (long long n = 0; n < f.level(); ++n)
      if (!(P(m, n).sigma(p) == P(p * m, n))) return false;
  return true;
}

OneMinusPhiReport check_one_minus_phistar(int k, const LevelFunction<mpq_class>& phi,
                                          const GL2ModN& g, u64 p, std::size_t q_prec,
                                          int p_prec) {
  if (k < 1) throw ParameterError("check_one_minus_phistar needs k >= 1");
  // the raw unit-filtered sum: no p > k+2 gate, so p = 3 is admissible
  const auto lhs = eisenstein_kronecker(k + 2, 0, phi, g, p, q_prec, p_prec);
  const auto E = eisenstein::eis_classical(k, phi, g, q_prec);
  const auto rhs = qexp::embed(E - qexp::phi_star(E, static_cast<long long>(p)), p, p_prec);
  const auto bad = first_difference(lhs, rhs);
  return {!bad.has_value(), bad,
          sigma_fourier_shift_holds(level::act_gl2(g, phi), static_cast<long long>(p))};
}

}  // namespace eiskron::padic_eis
