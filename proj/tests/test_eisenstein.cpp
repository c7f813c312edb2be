#include <gtest/gtest.h>

#include "eiskron/eisenstein.hpp"
#include "support.hpp"

namespace eiskron {
namespace {

using namespace eiskron::testing;
using eisenstein::katz_phi;

LevelFunction<CycRat> random_cyc_function(int N) {
  LevelFunction<CycRat> f(N, arith::CyclotomicField::get(N));
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) f(a, b) = random_cyc(N);
  return f;
}

mpz_class power(long long base, int e) { return arith::ipow(base, static_cast<unsigned>(e)); }

TEST(Katz, LowCoefficients) {
  for (int k = 2; k <= 5; ++k) {
    const auto f = random_cyc_function(5);
    const auto phi = katz_phi(k, 0, f, 6);
    const mpq_class sign = k % 2 == 0 ? 1 : -1;
    EXPECT_EQ(phi[1] * mpq_class(2), f(1, 1) - f(-1, -1) * sign);
    EXPECT_EQ(phi[2] * mpq_class(2), f(1, 2) + f(2, 1) * mpq_class(power(2, k)) -
                                         (f(-1, -2) + f(-2, -1) * mpq_class(power(2, k))) * sign);
  }
  LevelFunction<CycRat> zero(4, arith::CyclotomicField::get(4));
  EXPECT_TRUE(katz_phi(3, 1, zero, 10).is_zero());
  EXPECT_THROW(katz_phi(1, 0, zero, 10), ParameterError);
  EXPECT_THROW(katz_phi(0, 1, zero, 10), ParameterError);
}

TEST(Katz, AgainstDirectEnumeration) {
  for (int N : {3, 4})
    for (int k = 1; k <= 3; ++k)
      for (int r = 1; r <= 3; ++r) {
        const auto f = random_cyc_function(N);
        const std::size_t Q = 24;
        const auto phi = katz_phi(k, r, f, Q);
        EXPECT_TRUE(phi[0].is_zero());
        for (long long n = 1; n <= static_cast<long long>(Q); ++n) {
          CycRat acc(f.context());
          for (long long d = 1; d <= n; ++d) {
            if (n % d) continue;
            const long long dp = n / d;
            const mpq_class w(power(d, k) * power(dp, r));
            const mpq_class wm(power(-d, k) * power(-dp, r));
            acc += f(d, dp) * w - f(-d, -dp) * wm;
          }
          EXPECT_EQ(phi[n] * mpq_class(2), acc) << "n=" << n;
        }
      }
}

TEST(Katz, ConstantTermIsHalfLValue) {
  for (int k = 2; k <= 6; ++k) {
    const auto f = random_cyc_function(5);
    lfunc::PeriodicFunction<CycRat> h{5, {}};
    for (int m = 0; m < 5; ++m) h.values.push_back(f(m, 0));
    EXPECT_EQ(eisenstein::katz_constant_term(f, k), lfunc::l_value_neg(h, k) * mpq_class(1, 2));
  }
}

TEST(Eisenstein, ZeroAndConstantTerm) {
  LevelFunction<mpq_class> zero(3, {});
  EXPECT_TRUE(eisenstein::eis_classical(2, zero, GL2ModN::identity(3), 10).is_zero());
  for (int k = 1; k <= 4; ++k) {
    const auto phi = random_phi(4);
    const auto g = random_gl2(4);
    const auto E = eisenstein::eis_classical(k, phi, g, 5);
    const auto P = level::p1(level::act_gl2(g, phi));
    lfunc::PeriodicFunction<CycRat> h{4, {}};
    for (int m = 0; m < 4; ++m) {
      const mpq_class sign = (k + 1) % 2 == 0 ? 1 : -1;
      h.values.push_back(P(0, m) - P(0, -m) * sign);
    }
    EXPECT_EQ(E[0], lfunc::l_value_neg(h, k + 1) * mpq_class(1, 4));
  }
}

TEST(Eisenstein, EqualsKatzFormOfTheFourierDatum) {
  for (int N : {3, 4, 5})
    for (int k = 1; k <= 4; ++k) {
      const auto phi = random_phi(N);
      const auto g = random_gl2(N);
      EXPECT_EQ(eisenstein::eis_classical(k, phi, g, 30),
                katz_phi(k + 1, 0, level::katz_datum(phi, g), 30));
    }
}

TEST(Eisenstein, LatticeSumParity) {
  // the summand at -(m,n) is (-1)^K times the one at (m,n) for phi(-x)
  const auto tau = std::complex<double>(0.3, 1.1);
  for (int k = 1; k <= 2; ++k) {
    const auto phi = random_phi(3);
    LevelFunction<mpq_class> neg(3, {});
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) neg(a, b) = phi(-a, -b);
    const auto sums = eisenstein::lattice_class_sums(3, k, tau, 60);
    const auto x = eisenstein::eis_lattice_complex(k, phi, GL2ModN::identity(3), sums);
    const auto y = eisenstein::eis_lattice_complex(k, neg, GL2ModN::identity(3), sums);
    const double sign = (k + 2) % 2 == 0 ? 1.0 : -1.0;
    EXPECT_LT(std::abs(x - sign * y), 1e-12 * (1 + std::abs(x)));
  }
  LevelFunction<mpq_class> zero(3, {});
  EXPECT_EQ(eisenstein::eis_lattice_complex(2, zero, GL2ModN::identity(3), tau, 10),
            std::complex<double>(0.0));
}

TEST(Eisenstein, LatticeSumMatchesQExpansionCoarsely) {
  const std::complex<double> tau(0.0, 2.0);
  const int N = 3, k = 2;
  const auto sums = eisenstein::lattice_class_sums(N, k, tau, 400);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      const auto phi = LevelFunction<mpq_class>::delta(N, {}, a, b);
      const auto E = eisenstein::eis_classical(k, phi, GL2ModN::identity(N), 30);
      const auto lhs = eisenstein::evaluate(E, eisenstein::cusp_parameter(tau, N));
      const auto rhs = eisenstein::eis_lattice_complex(k, phi, GL2ModN::identity(N), sums);
      EXPECT_LT(std::abs(lhs - rhs), 1e-4 * (1e-9 + std::abs(lhs))) << a << "," << b;
    }
}

TEST(Eisenstein, CompletedRowsMatchQExpansionAtWeightThree) {
  const std::complex<double> tau(0.0, 2.0);
  const int N = 4, k = 1;
  const auto plain = eisenstein::lattice_class_sums(N, k, tau, 150);
  const auto completed = eisenstein::lattice_class_sums(N, k, tau, 150, true);
  double worst_plain = 0, worst_completed = 0;
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      const auto phi = LevelFunction<mpq_class>::delta(N, {}, a, b);
      const auto E = eisenstein::eis_classical(k, phi, GL2ModN::identity(N), 30);
      const auto lhs = eisenstein::evaluate(E, eisenstein::cusp_parameter(tau, N));
      const double scale = 1e-9 + std::abs(lhs);
      const auto x = eisenstein::eis_lattice_complex(k, phi, GL2ModN::identity(N), plain);
      const auto y = eisenstein::eis_lattice_complex(k, phi, GL2ModN::identity(N), completed);
      worst_plain = std::max(worst_plain, std::abs(lhs - x) / scale);
      worst_completed = std::max(worst_completed, std::abs(lhs - y) / scale);
    }
  EXPECT_LT(worst_completed, 1e-7);
  EXPECT_GT(worst_plain, 1e-4);
}

TEST(Eisenstein, Validation) {
  LevelFunction<mpq_class> zero(3, {});
  EXPECT_THROW(eisenstein::eis_classical(0, zero, GL2ModN::identity(3), 5), ParameterError);
  EXPECT_THROW(eisenstein::lattice_class_sums(3, 1, {0.0, -1.0}, 5), ParameterError);
  EXPECT_THROW(eisenstein::lattice_class_sums(3, 1, {0.0, 1.0}, 0), ParameterError);
}

}  // namespace
}  // namespace eiskron
