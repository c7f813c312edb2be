#include <gtest/gtest.h>

#include <complex>
#include <numbers>

#include "eiskron/lfunc.hpp"
#include "support.hpp"

namespace eiskron {
namespace {

using namespace eiskron::testing;
using lfunc::PeriodicFunction;

// B_n from the inverse of (e^t - 1)/t = sum t^j/(j+1)!, as n! [t^n].
std::vector<mpq_class> bernoulli_by_series_inversion(int n_max) {
  std::vector<mpq_class> a(n_max + 1), inv(n_max + 1);
  mpz_class fact = 1;
  for (int j = 0; j <= n_max; ++j) {
    fact *= j + 1;
    a[j] = arith::rat(mpz_class(1), fact);
  }
  inv[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    mpq_class s = 0;
    for (int j = 1; j <= n; ++j) s += a[j] * inv[n - j];
    inv[n] = -s;
  }
  std::vector<mpq_class> B(n_max + 1);
  mpz_class nf = 1;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) nf *= n;
    B[n] = inv[n] * nf;
    B[n].canonicalize();
  }
  return B;
}

PeriodicFunction<mpq_class> constant_one(int N) {
  return {N, std::vector<mpq_class>(N, mpq_class(1))};
}

TEST(Bernoulli, GeneratingFunctionOracle) {
  const auto B = bernoulli_by_series_inversion(30);
  for (int n = 0; n <= 30; ++n) EXPECT_EQ(lfunc::bernoulli_number(n), B[n]) << n;
  EXPECT_EQ(lfunc::bernoulli_number(1), mpq_class(-1, 2));
  EXPECT_EQ(lfunc::bernoulli_number(12), mpq_class(-691, 2730));
}

TEST(Bernoulli, PolynomialExamples) {
  EXPECT_EQ(lfunc::bernoulli_poly(0), (std::vector<mpq_class>{1}));
  EXPECT_EQ(lfunc::bernoulli_poly(1), (std::vector<mpq_class>{mpq_class(-1, 2), 1}));
  EXPECT_EQ(lfunc::bernoulli_poly(2), (std::vector<mpq_class>{mpq_class(1, 6), -1, 1}));
}

TEST(Bernoulli, DifferenceReflectionMultiplication) {
  for (int n = 1; n <= 12; ++n) {
    const auto b = lfunc::bernoulli_poly(n);
    for (int t = 0; t < 5; ++t) {
      const mpq_class x = random_rational();
      mpq_class xn1 = 1;
      for (int i = 0; i < n - 1; ++i) xn1 *= x;
      EXPECT_EQ(lfunc::eval_poly(b, x + 1) - lfunc::eval_poly(b, x), n * xn1);
      const mpq_class sign = n % 2 == 0 ? 1 : -1;
      EXPECT_EQ(lfunc::eval_poly(b, 1 - x), sign * lfunc::eval_poly(b, x));
      for (int m : {2, 3, 5}) {
        mpq_class s = 0;
        for (int j = 0; j < m; ++j) s += lfunc::eval_poly(b, x + arith::rat(j, m));
        mpq_class mp = 1;
        for (int i = 0; i < n - 1; ++i) mp *= m;
        EXPECT_EQ(lfunc::eval_poly(b, m * x), mp * s);
      }
    }
  }
}

TEST(LValue, RiemannZetaAtNegativeIntegers) {
  EXPECT_EQ(lfunc::l_value_neg(constant_one(3), 1), mpq_class(-1, 12));
  EXPECT_EQ(lfunc::l_value_neg(constant_one(3), 0), mpq_class(-1, 2));
  for (int N : {1, 2, 3, 4, 7})
    for (int k = 1; k <= 8; ++k)
      EXPECT_EQ(lfunc::l_value_neg(constant_one(N), k),
                -lfunc::bernoulli_number(k + 1) / (k + 1))
          << "N=" << N << " k=" << k;
}

TEST(LValue, Characters) {
  PeriodicFunction<mpq_class> chi4{4, {0, 1, 0, -1}};
  PeriodicFunction<mpq_class> chi3{3, {0, 1, -1}};
  EXPECT_EQ(lfunc::l_value_neg(chi4, 0), mpq_class(1, 2));
  EXPECT_EQ(lfunc::l_value_neg(chi3, 0), mpq_class(1, 3));
  // L(chi_{-4}, -2) = E_2/2 = -1/2
  EXPECT_EQ(lfunc::l_value_neg(chi4, 2), mpq_class(-1, 2));
}

TEST(LValue, DeltaIsSingleBernoulliTerm) {
  const int N = 5;
  for (int a0 = 1; a0 <= N; ++a0)
    for (int k = 0; k <= 5; ++k) {
      PeriodicFunction<mpq_class> f{N, std::vector<mpq_class>(N, mpq_class(0))};
      f.values[a0 % N] = 1;
      const mpq_class expect = -lfunc::eval_poly(lfunc::bernoulli_poly(k + 1), arith::rat(a0, N)) *
                               arith::ipow(N, k) / (k + 1);
      EXPECT_EQ(lfunc::l_value_neg(f, k), expect);
    }
}

TEST(LValue, ComplexPartialSums) {
  const auto z2 = lfunc::l_value_complex({1.0}, 2);
  EXPECT_NEAR(z2.value.real(), std::numbers::pi * std::numbers::pi / 6, 1e-8);
  const auto catalan = lfunc::l_value_complex({0.0, 1.0, 0.0, -1.0}, 2, 1000);
  EXPECT_NEAR(catalan.value.real(), 0.915965594177219015, 1e-12);
  EXPECT_EQ(lfunc::l_value_complex({0.0, 0.0, 0.0}, 3).value, std::complex<double>(0.0));
  EXPECT_THROW(lfunc::l_value_complex({1.0}, 1), ParameterError);
}

// L(h^, 1-k) = C_k (L(h, k) + (-1)^k L(h^-, k)) / 2 with h^(n) = sum_v h(v) zeta^{nv},
// h^-(m) = h(-m), C_k = (-1)^k 2 N^k (k-1)! / (2 pi i)^k.
TEST(LValue, FunctionalEquationGeneralForm) {
  for (int N : {3, 4, 5})
    for (int k = 2; k <= 4; ++k) {
      const auto phi = random_phi(N);
      const auto P = level::p2(phi);
      const auto lhs = lfunc::l_value_neg(lfunc::second_coordinate(P), k - 1).to_complex();
      std::vector<std::complex<double>> h(N), hm(N);
      for (int m = 0; m < N; ++m) {
        h[m] = phi(0, m).get_d();
        hm[m] = phi(0, -m).get_d();
      }
      const auto Lh = lfunc::l_value_complex(h, k).value;
      const auto Lhm = lfunc::l_value_complex(hm, k).value;
      double fact = 1;
      for (int i = 2; i < k; ++i) fact *= i;
      const std::complex<double> C = (k % 2 ? -1.0 : 1.0) * 2 * std::pow(N, k) * fact /
                                     std::pow(std::complex<double>(0, 2 * std::numbers::pi), k);
      const auto rhs = C * (Lh + (k % 2 ? -1.0 : 1.0) * Lhm) / 2.0;
      EXPECT_LT(std::abs(lhs - rhs), 1e-7 * (1 + std::abs(rhs))) << "N=" << N << " k=" << k;
    }
}

TEST(Horospherical, Examples) {
  const int N = 3;
  LevelFunction<mpq_class> zero(N, {});
  EXPECT_EQ(lfunc::horospherical(zero, 2, GL2ModN::identity(N)), 0);
  for (int b = 0; b < N; ++b)
    for (int k = 0; k <= 4; ++k) {
      const auto d = LevelFunction<mpq_class>::delta(N, {}, 0, b);
      mpz_class kf;
      mpz_fac_ui(kf.get_mpz_t(), static_cast<unsigned>(k));
      const mpq_class expect = lfunc::eval_poly(lfunc::bernoulli_poly(k + 2), arith::rat(b, N)) *
                               arith::rat(arith::ipow(N, k), kf * (k + 2));
      EXPECT_EQ(lfunc::horospherical_bernoulli(d, k, GL2ModN::identity(N)), expect);
    }
}

TEST(Horospherical, BothFormulasAgree) {
  for (int N : {3, 4, 5})
    for (int k = 0; k <= 6; ++k)
      for (int t = 0; t < 3; ++t) {
        const auto phi = random_phi(N);
        const auto g = random_gl2(N);
        EXPECT_EQ(lfunc::horospherical_bernoulli(phi, k, g), lfunc::horospherical_lvalue(phi, k, g))
            << "N=" << N << " k=" << k;
      }
}

TEST(Horospherical, ResidueScalar) {
  const auto phi = random_phi(3);
  const auto g = random_gl2(3);
  EXPECT_EQ(lfunc::residue_de_rham(phi, 1, g), -lfunc::horospherical(phi, 1, g));
  for (int k = 1; k <= 4; ++k) {
    const auto psi = random_phi(5);
    EXPECT_EQ(lfunc::residue_de_rham(psi, k, GL2ModN::identity(5)),
              -lfunc::horospherical(psi, k, GL2ModN::identity(5)) / arith::ipow(5, k - 1));
  }
  EXPECT_EQ(lfunc::residue_de_rham(LevelFunction<mpq_class>(3, {}), 2, g), 0);
}

}  // namespace
}  // namespace eiskron
