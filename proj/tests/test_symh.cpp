#include <gtest/gtest.h>

#include <set>

#include "eiskron/symh.hpp"
#include "support.hpp"

namespace eiskron {
namespace {

using namespace eiskron::testing;
using symh::SymOneForm;
using symh::SymSection;
using qexp::QExpansion;

mpz_class factorial(int n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned>(n));
  return r;
}

QExpansion<mpq_class> series(std::vector<long long> c) {
  std::vector<mpq_class> q;
  for (auto x : c) q.push_back(mpq_class(mpz_class(static_cast<long>(x))));
  return QExpansion<mpq_class>({}, q);
}

TEST(Symh, NablaSlots) {
  // k = 2: c0 = q, c1 = 1 + q^2, c2 = 3q
  SymSection<mpq_class> s{{series({0, 1, 0}), series({1, 0, 1}), series({0, 3, 0})}};
  const auto w = symh::nabla(s);
  EXPECT_EQ(w.coeffs[0], series({0, 1, 0}));
  EXPECT_EQ(w.coeffs[1], series({0, 2, 2}));      // 2 c0 + theta c1
  EXPECT_EQ(w.coeffs[2], series({1, 3, 1}));      // 1 c1 + theta c2
}

TEST(Symh, FrobeniusScalesSlots) {
  SymOneForm<mpq_class> w{{series({1, 1, 0, 0}), series({2, 0, 0, 0})}, std::nullopt};
  const auto fw = symh::frobenius_oneform(w, 3);
  EXPECT_EQ(fw.coeffs[0], series({1, 0, 0, 1}));
  EXPECT_EQ(fw.coeffs[1], series({2, 0, 0, 0}).scaled(mpq_class(1, 3)));
  const auto om = symh::one_minus_frobenius(w, 3);
  EXPECT_EQ(om.coeffs[0], series({0, 1, 0, -1}));
}

TEST(Symh, FrobeniusPadicLosesPrecision) {
  auto F = arith::CyclotomicField::get(3);
  SymOneForm<PadicCyc> w = SymOneForm<PadicCyc>::zero(2, {F, 5, 4}, 3);
  w.coeffs[2][1] = PadicCyc::from_int(F, 5, 4, 50);
  const auto fw = symh::frobenius_oneform(w, 5);
  EXPECT_EQ(fw.coeffs[2][0].precision(), 2);
  w.coeffs[2][0] = PadicCyc::from_int(F, 5, 4, 1);
  EXPECT_THROW(symh::frobenius_oneform(w, 5), PrecisionError);
}

TEST(Symh, NablaAlphaTelescopes) {
  for (int k = 1; k <= 3; ++k) {
    const arith::u64 p = 7;
    const auto phi = random_phi(3);
    const auto g = random_gl2(3);
    const auto a = symh::alpha_eis(k, phi, g, p, 25, 5);
    const auto na = symh::nabla(a);
    const auto E = padic_eis::eis_p({k, 0, phi, g, p, 25, 5});
    const auto inv = arith::RingTraits<PadicCyc>::from_rational(E.context(), arith::rat(mpz_class(1), factorial(k)));
    EXPECT_EQ(na.coeffs[0], E.map([&](const PadicCyc& x) { return x * inv; }));
    for (int n = 1; n <= k; ++n) EXPECT_TRUE(na.coeffs[n].is_zero()) << "k=" << k << " slot " << n;
  }
}

TEST(Symh, MainTheorem) {
  for (auto [k, p] : {std::pair{1, 5ull}, {1, 7ull}, {2, 7ull}, {3, 11ull}, {4, 7ull}})
    for (int N : {3, 4}) {
      const auto phi = random_p_integral_phi(N, static_cast<long long>(p));
      const auto g = random_gl2(N);
      const auto rep = symh::verify_syntomic_pair(symh::alpha_eis(k, phi, g, p, 30, 6),
                                                  symh::eis_dr_oneform(k, phi, g, 30), p);
      EXPECT_TRUE(rep.pass) << "k=" << k << " p=" << p << " N=" << N;
      EXPECT_EQ(rep.p_prec, 6);
      EXPECT_TRUE(rep.residuals.empty());
    }
}

TEST(Symh, EisDrNormalization) {
  const auto xi = symh::eis_dr_oneform(2, random_phi(3), GL2ModN::identity(3), 10);
  ASSERT_TRUE(xi.dr_normalization.has_value());
  EXPECT_EQ(*xi.dr_normalization, mpq_class(2, 27));
  for (int n = 1; n <= 2; ++n) EXPECT_TRUE(xi.coeffs[n].is_zero());
}

TEST(Symh, FaultInjectionPinpointsResiduals) {
  const int k = 2, M = 5;
  const arith::u64 p = 7;
  const auto phi = random_phi(3);
  const auto g = GL2ModN::identity(3);
  const auto alpha = symh::alpha_eis(k, phi, g, p, 20, M);
  const auto xi = symh::eis_dr_oneform(k, phi, g, 20);
  const auto& ctx = alpha.coeffs[0].context();
  const PadicCyc eps = PadicCyc::from_int(ctx.field, p, M, static_cast<long long>(arith::ipow_checked(p, M - 1)));
  for (int n = 0; n <= k; ++n)
    for (std::size_t i : {1u, 3u, 7u, 14u}) {
      auto bad = alpha;
      bad.coeffs[n][i] += eps;
      const auto rep = symh::verify_syntomic_pair(bad, xi, p);
      std::set<std::pair<int, std::size_t>> got, want;
      for (const auto& r : rep.residuals) {
        got.insert({r.slot, r.q_power});
        EXPECT_EQ(r.valuation, M - 1);
      }
      if (i % p != 0) want.insert({n, i});
      if (n < k) want.insert({n + 1, i});
      EXPECT_EQ(got, want) << "slot " << n << " q^" << i;
      EXPECT_EQ(rep.pass, want.empty());
    }
}

TEST(Symh, HorizontalProbe) {
  auto F = arith::CyclotomicField::get(3);
  for (int k = 0; k <= 4; ++k) {
    auto s = SymSection<CycRat>::zero(k, F, 12);
    s.coeffs[k][0] = random_cyc(3);
    EXPECT_TRUE(symh::horizontal_kernel_probe(s).pass());

    auto t = s;
    t.coeffs[0][0] = CycRat::from_rational(F, 1);
    const auto rep = symh::horizontal_kernel_probe(t);
    if (k == 0) {
      EXPECT_TRUE(rep.pass());
    } else {
      EXPECT_FALSE(rep.horizontal);
      EXPECT_EQ(rep.failing_slots, std::vector<int>{1});
    }

    auto u = s;
    u.coeffs[k][3] = CycRat::from_rational(F, 2);
    EXPECT_FALSE(symh::horizontal_kernel_probe(u).horizontal);
  }
}

TEST(Symh, HorizontalProbeModPSeesLargerKernel) {
  auto F = arith::CyclotomicField::get(3);
  auto s = SymSection<PadicCyc>::zero(1, {F, 5, 3}, 10);
  s.coeffs[1][5] = PadicCyc::from_int(F, 5, 3, 25);
  const auto rep = symh::horizontal_kernel_probe(s);
  EXPECT_TRUE(rep.horizontal);
  EXPECT_FALSE(rep.shape_ok);
}

}  // namespace
}  // namespace eiskron
