#include "eiskron/lfunc.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "eiskron/kernels/dirichlet_sum.hpp"

namespace eiskron::lfunc {

namespace {

mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial(unsigned n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace

mpq_class bernoulli_number(int k) {
  if (k < 0) throw ParameterError("Bernoulli index must be >= 0");
  static std::mutex mu;
  static std::vector<mpq_class> table{mpq_class(1)};
  std::lock_guard lock(mu);
  while (static_cast<int>(table.size()) <= k) {
    const unsigned n = static_cast<unsigned>(table.size());
    mpq_class s = 0;
    for (unsigned j = 0; j < n; ++j) s += mpq_class(binomial(n + 1, j)) * table[j];
    mpq_class b = -s / (n + 1);
    b.canonicalize();
    table.push_back(b);
  }
  return table[k];
}

std::vector<mpq_class> bernoulli_poly(int k) {
  if (k < 0) throw ParameterError("Bernoulli degree must be >= 0");
  std::vector<mpq_class> c(k + 1);
  for (int j = 0; j <= k; ++j)
    c[k - j] = mpq_class(binomial(static_cast<unsigned>(k), static_cast<unsigned>(j))) *
               bernoulli_number(j);
  return c;
}

mpq_class eval_poly(const std::vector<mpq_class>& coeffs, const mpq_class& x) {
  mpq_class r = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) r = r * x + *it;
  return r;
}

namespace {

// zeta(s, x) for large x by Euler-Maclaurin, s >= 2.
double hurwitz_tail(int s, double x) {
  double r = std::pow(x, 1 - s) / (s - 1) + 0.5 * std::pow(x, -s);
  double rising = s;  // s (s+1) ... (s+2j-2)
  double fact = 2.0;  // (2j)!
  for (int j = 1; j <= 4; ++j) {
    r += bernoulli_number(2 * j).get_d() / fact * rising * std::pow(x, -s - 2 * j + 1);
    rising *= (s + 2 * j - 1) * (s + 2 * j);
    fact *= (2 * j + 1) * (2 * j + 2);
  }
  return r;
}

}  // namespace

ComplexLValue l_value_complex(const std::vector<std::complex<double>>& f, int k, long long terms) {
  if (k < 2) throw ParameterError("L(f, k) is not absolutely convergent for k < 2");
  if (f.empty()) throw ParameterError("empty periodic function");
  if (terms < 1) throw ParameterError("need at least one term");
  const long long N = static_cast<long long>(f.size());
  std::complex<double> partial = kernels::dirichlet_partial_sum_omp(f, k, terms);
  std::complex<double> tail = 0.0;
  for (long long a = 0; a < N; ++a) {
    if (f[a] == 0.0) continue;
    const long long first = terms + 1 + arith::floor_mod(a - (terms + 1), N);
    tail += f[a] * std::pow(static_cast<double>(N), -k) *
            hurwitz_tail(k, static_cast<double>(first) / static_cast<double>(N));
  }
  return {partial + tail, std::abs(tail), terms};
}

mpq_class horospherical_bernoulli(const level::LevelFunction<mpq_class>& phi, int k,
                                  const level::GL2ModN& g) {
  if (k < 0) throw ParameterError("horospherical needs k >= 0");
  const int N = phi.level();
  const auto b = bernoulli_poly(k + 2);
  const level::GL2ModN ginv = g.inverse();
  mpq_class acc = 0;
  for (long long t1 = 0; t1 < N; ++t1)
    for (long long t2 = 0; t2 < N; ++t2) {
      auto [u, v] = ginv.apply(t1, t2);
      const mpq_class& val = phi(u, v);
      if (val == 0) continue;
      acc += val * eval_poly(b, arith::rat(t2, N));
    }
  mpq_class scale(arith::ipow(N, static_cast<unsigned>(k)),
                  factorial(static_cast<unsigned>(k)) * (k + 2));
  scale.canonicalize();
  return acc * scale;
}

mpq_class horospherical_lvalue(const level::LevelFunction<mpq_class>& phi, int k,
                               const level::GL2ModN& g) {
  if (k < 0) throw ParameterError("horospherical needs k >= 0");
  const int N = phi.level();
  const auto h = second_coordinate(level::p1(level::act_gl2(g, phi)));
  const arith::CycRat L = l_value_neg(h, k + 1);
  if (!L.is_rational())
    throw std::logic_error("L(P1(g phi), -k-1) is not rational for rational phi");
  mpq_class scale(-1, factorial(static_cast<unsigned>(k)) * N);
  scale.canonicalize();
  return L.rational_part() * scale;
}

mpq_class horospherical(const level::LevelFunction<mpq_class>& phi, int k,
                        const level::GL2ModN& g) {
  mpq_class a = horospherical_bernoulli(phi, k, g);
  mpq_class b = horospherical_lvalue(phi, k, g);
  if (a != b)
    throw std::logic_error("horospherical expressions disagree: " + a.get_str() + " vs " +
                           b.get_str());
  return a;
}

mpq_class residue_de_rham(const level::LevelFunction<mpq_class>& phi, int k,
                          const level::GL2ModN& g) {
  const int N = phi.level();
  mpq_class scale;
  if (k >= 1)
    scale = arith::rat(mpz_class(-1), arith::ipow(N, static_cast<unsigned>(k - 1)));
  else
    scale = mpq_class(mpz_class(-static_cast<long>(N)));
  scale.canonicalize();
  return scale * horospherical(phi, k, g);
}

}  // namespace eiskron::lfunc
