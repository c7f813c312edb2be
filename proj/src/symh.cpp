#include "eiskron/symh.hpp"

namespace eiskron::symh {

namespace {

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

VerificationReport compare(const SymOneForm<PadicCyc>& lhs, const SymOneForm<PadicCyc>& rhs,
                           u64 p) {
  VerificationReport rep{true, lhs.k(), p, 0, 0, {}};
  if (lhs.k() != rhs.k()) throw ParameterError("symmetric powers differ");
  const auto& ctx = lhs.coeffs[0].context();
  rep.p_prec = ctx.precision;
  rep.q_prec = lhs.coeffs[0].q_prec();
  for (int n = 0; n <= lhs.k(); ++n) {
    const auto& a = lhs.coeffs[n];
    const auto& b = rhs.coeffs[n];
    const std::size_t q = std::min(a.q_prec(), b.q_prec());
    rep.q_prec = std::min(rep.q_prec, q);
    for (std::size_t i = 0; i <= q; ++i) {
      const PadicCyc diff = a[i] - b[i];
      rep.p_prec = std::min(rep.p_prec, diff.precision());
      if (!diff.is_zero()) {
        rep.pass = false;
        rep.residuals.push_back({n, i, diff.valuation()});
      }
    }
  }
  return rep;
}

}  // namespace

SymOneForm<CycRat> eis_dr_oneform(int k, const LevelFunction<mpq_class>& phi, const GL2ModN& g,
                                  std::size_t q_prec) {
  if (k < 1) throw ParameterError("eis_dr_oneform needs k >= 1");
  const auto E = eisenstein::eis_classical(k, phi, g, q_prec);
  auto form = SymOneForm<CycRat>::zero(k, E.context(), q_prec);
  const mpq_class inv_fact = arith::rat(mpz_class(1), factorial(static_cast<unsigned>(k)));
  form.coeffs[0] = E.scaled(inv_fact);
  const mpq_class norm = arith::rat(mpz_class(2), arith::ipow(phi.level(), static_cast<unsigned>(k + 1)));
  form.dr_normalization = norm;
  return form;
}

SymSection<PadicCyc> alpha_eis(int k, const LevelFunction<mpq_class>& phi, const GL2ModN& g,
                               u64 p, std::size_t q_prec, int p_prec) {
  if (k < 1) throw ParameterError("alpha_eis needs k >= 1");
  arith::validate_padic_parameters(phi.level(), p, p_prec);
  if (p <= static_cast<u64>(k + 2)) throw ParameterError("alpha_eis needs p > k + 2");
  SymSection<PadicCyc> s;
  for (int n = 0; n <= k; ++n) {
    // E^(p)_{k+1-n, -1-n}: d exponent k-n, d' exponent -1-n
    auto E = padic_eis::eisenstein_kronecker(k + 1 - n, -1 - n, phi, g, p, q_prec, p_prec);
    const mpq_class coef = arith::rat(mpz_class(n % 2 == 0 ? 1 : -1), factorial(static_cast<unsigned>(k - n)));
    const PadicCyc c = RingTraits<PadicCyc>::from_rational(E.context(), coef);
    s.coeffs.push_back(E.map([&](const PadicCyc& x) { return x * c; }));
  }
  return s;
}

VerificationReport verify_syntomic_pair(const SymSection<PadicCyc>& alpha,
                                        const SymOneForm<PadicCyc>& xi, u64 p) {
  if (alpha.k() != xi.k()) throw ParameterError("alpha and xi have different symmetric powers");
  return compare(nabla(alpha), one_minus_frobenius(xi, p), p);
}

VerificationReport verify_syntomic_pair(const SymSection<PadicCyc>& alpha,
                                        const SymOneForm<CycRat>& xi, u64 p) {
  if (alpha.k() != xi.k()) throw ParameterError("alpha and xi have different symmetric powers");
  const int M = alpha.coeffs[0].context().precision;
  const auto exact = one_minus_frobenius(xi, p);
  SymOneForm<PadicCyc> rhs{{}, xi.dr_normalization};
  for (const auto& c : exact.coeffs) rhs.coeffs.push_back(qexp::embed(c, p, M));
  return compare(nabla(alpha), rhs, p);
}

}  // namespace eiskron::symh
