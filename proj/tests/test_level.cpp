#include <gtest/gtest.h>

#include <complex>
#include <numbers>

#include "support.hpp"

namespace eiskron {
namespace {

using namespace eiskron::testing;
using level::act_gl2;
using level::lift;
using level::p1;
using level::p2;
using level::symplectic_hat;
using level::transpose;

std::complex<double> e(long long j, int N) {
  return std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(j) / N);
}

TEST(GL2, GroupLaw) {
  for (int N : {3, 4, 5, 12})
    for (int t = 0; t < 20; ++t) {
      const auto g = random_gl2(N), h = random_gl2(N);
      EXPECT_EQ(g * g.inverse(), GL2ModN::identity(N));
      EXPECT_EQ((g * h).inverse(), h.inverse() * g.inverse());
    }
  EXPECT_THROW(GL2ModN::make(4, 2, 0, 0, 1), ParameterError);
  EXPECT_EQ(level::to_string(GL2ModN::make(5, 0, -1, 1, 0)), "0,4;1,0");
}

TEST(GL2, ActionExamples) {
  const auto phi = random_phi(5);
  EXPECT_EQ(act_gl2(GL2ModN::identity(5), phi), phi);
  const auto g = GL2ModN::make(5, 0, -1, 1, 0);
  const auto d10 = LevelFunction<mpq_class>::delta(5, {}, 1, 0);
  EXPECT_EQ(act_gl2(g, d10), (LevelFunction<mpq_class>::delta(5, {}, 0, 1)));
}

TEST(GL2, ActionIsAGroupAction) {
  for (int N : {3, 4, 5})
    for (int t = 0; t < 20; ++t) {
      const auto g = random_gl2(N), h = random_gl2(N);
      const auto phi = random_phi(N);
      EXPECT_EQ(act_gl2(g * h, phi), act_gl2(g, act_gl2(h, phi)));
    }
}

TEST(Fourier, DeltaAndConstantExamples) {
  for (int N : {3, 4, 5}) {
    const auto d00 = LevelFunction<mpq_class>::delta(N, {}, 0, 0);
    LevelFunction<mpq_class> one(N, {});
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) one(a, b) = 1;
    const auto P1d = p1(d00), P2d = p2(d00), H = symplectic_hat(d00);
    const auto P1one = p1(one), P2one = p2(one);
    for (int m = 0; m < N; ++m)
      for (int n = 0; n < N; ++n) {
        EXPECT_EQ(P1d(m, n), CycRat::from_rational(P1d.context(), n == 0 ? 1 : 0));
        EXPECT_EQ(P2d(m, n), CycRat::from_rational(P2d.context(), m == 0 ? 1 : 0));
        EXPECT_EQ(H(m, n), CycRat::from_rational(H.context(), mpq_class(1, N)));
        EXPECT_EQ(P1one(m, n), CycRat::from_rational(P1d.context(), m == 0 ? N : 0));
        EXPECT_EQ(P2one(m, n), CycRat::from_rational(P1d.context(), n == 0 ? N : 0));
      }
  }
}

TEST(Fourier, AgreesWithComplexDoubleSums) {
  for (int N : {3, 5, 7}) {
    const auto phi = random_phi(N);
    const auto P1 = p1(phi), P2 = p2(phi), H = symplectic_hat(phi);
    for (int m = 0; m < N; ++m)
      for (int n = 0; n < N; ++n) {
        std::complex<double> s1, s2, sh;
        for (int v = 0; v < N; ++v) {
          s1 += phi(v, n).get_d() * e(static_cast<long long>(m) * v, N);
          s2 += phi(m, v).get_d() * e(static_cast<long long>(n) * v, N);
        }
        for (int u = 0; u < N; ++u)
          for (int v = 0; v < N; ++v)
            sh += phi(u, v).get_d() * e(static_cast<long long>(u) * n - static_cast<long long>(m) * v, N);
        sh /= N;
        EXPECT_LT(std::abs(P1(m, n).to_complex() - s1), 1e-9);
        EXPECT_LT(std::abs(P2(m, n).to_complex() - s2), 1e-9);
        EXPECT_LT(std::abs(H(m, n).to_complex() - sh), 1e-9);
      }
  }
}

TEST(Fourier, P1WithInverseCharacterRecoversNPhi) {
  const int N = 5;
  const auto phi = random_phi(N);
  const auto P = p1(phi);
  for (int a = 0; a < N; ++a)
    for (int b = 0; b < N; ++b) {
      CycRat acc(P.context());
      for (int m = 0; m < N; ++m) acc += P(m, b) * CycRat::zeta(P.context(), -m * a);
      EXPECT_EQ(acc, CycRat::from_rational(P.context(), phi(a, b) * N));
    }
}

TEST(Fourier, HatIsAnInvolution) {
  for (int N : {3, 4, 5}) {
    const auto phi = random_phi(N);
    EXPECT_EQ(symplectic_hat(symplectic_hat(phi)), lift(phi));
  }
}

TEST(Fourier, Relations) {
  for (int N : {3, 4, 5, 7})
    for (int t = 0; t < 3; ++t) {
      const auto phi = random_phi(N);
      EXPECT_EQ(p2(transpose(symplectic_hat(phi))), p1(phi));
      EXPECT_EQ(p2(transpose(phi)), transpose(p1(phi)));
    }
}

TEST(Fourier, Transpose) {
  const auto d12 = LevelFunction<mpq_class>::delta(5, {}, 1, 2);
  EXPECT_EQ(transpose(d12), (LevelFunction<mpq_class>::delta(5, {}, 2, 1)));
  const auto phi = random_phi(4);
  EXPECT_EQ(transpose(transpose(phi)), phi);
  EXPECT_EQ(transpose(phi.scaled(mpq_class(3, 2))), transpose(phi).scaled(mpq_class(3, 2)));
}

TEST(Fourier, KatzDatumIsTransposedP1) {
  for (int N : {3, 4, 5}) {
    const auto phi = random_phi(N);
    const auto g = random_gl2(N);
    EXPECT_EQ(level::katz_datum(phi, g), transpose(p1(act_gl2(g, phi))));
  }
}

}  // namespace
}  // namespace eiskron
