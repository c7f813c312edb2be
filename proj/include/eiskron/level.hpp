#pragma once

#include <string>
#include <utility>
#include <vector>

#include "eiskron/arith/modular.hpp"
#include "eiskron/arith/ring.hpp"
#include "eiskron/errors.hpp"

namespace eiskron::level {

using arith::CycRat;
using arith::FieldPtr;
using arith::RingTraits;

/// Element of GL_2(Z/N), acting on column vectors (x, y).
struct GL2ModN {
  int N = 3;
  long long a = 1, b = 0, c = 0, d = 1;

  static GL2ModN identity(int N) { return {N, 1, 0, 0, 1}; }
  /// Throws ParameterError when the determinant is not a unit mod N.
  static GL2ModN make(int N, long long a, long long b, long long c, long long d);

  long long det() const { return arith::floor_mod(a * d - b * c, N); }
  GL2ModN inverse() const;
  std::pair<long long, long long> apply(long long x, long long y) const {
    return {arith::floor_mod(a * x + b * y, N), arith::floor_mod(c * x + d * y, N)};
  }

  friend GL2ModN operator*(const GL2ModN& g, const GL2ModN& h);
  friend bool operator==(const GL2ModN& g, const GL2ModN& h);
};

std::string to_string(const GL2ModN& g);

/// A function (Z/N)^2 -> R stored as a dense table; index a*N + b.
template <class R>
class LevelFunction {
 public:
  using Context = typename RingTraits<R>::Context;

  LevelFunction(int N, Context ctx)
      : N_(N), ctx_(ctx), values_(static_cast<std::size_t>(N) * N, RingTraits<R>::zero(ctx)) {
    if (N < 1) throw ParameterError("level must be positive");
  }

  int level() const { return N_; }
  const Context& context() const { return ctx_; }

  /// Arguments are reduced mod N, so negative indices are fine.
  const R& operator()(long long a, long long b) const { return values_[index(a, b)]; }
  R& operator()(long long a, long long b) { return values_[index(a, b)]; }

  const std::vector<R>& values() const { return values_; }

  static LevelFunction delta(int N, Context ctx, long long a, long long b) {
    LevelFunction f(N, ctx);
    f(a, b) = RingTraits<R>::from_int(ctx, 1);
    return f;
  }

  LevelFunction& operator+=(const LevelFunction& o) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  friend LevelFunction operator+(LevelFunction f, const LevelFunction& g) { return f += g; }

  template <class S>
  LevelFunction scaled(const S& s) const {
    LevelFunction r(*this);
    for (auto& v : r.values_) v = v * s;
    return r;
  }

  /// Precomposition with the endomorphism (u, v) -> (u, m v) of (Z/N)^2.
  LevelFunction second_scaled(long long m) const {
    LevelFunction r(N_, ctx_);
    for (long long a = 0; a < N_; ++a)
      for (long long b = 0; b < N_; ++b) r(a, b) = (*this)(a, m * b);
    return r;
  }

  friend bool operator==(const LevelFunction& f, const LevelFunction& g) {
    return f.N_ == g.N_ && f.values_ == g.values_;
  }

 private:
  std::size_t index(long long a, long long b) const {
    return static_cast<std::size_t>(arith::floor_mod(a, N_) * N_ + arith::floor_mod(b, N_));
  }

  int N_;
  Context ctx_;
  std::vector<R> values_;
};

/// (g phi)(x) = phi(g^{-1} x).
template <class R>
LevelFunction<R> act_gl2(const GL2ModN& g, const LevelFunction<R>& phi) {
  if (g.N != phi.level()) throw ParameterError("act_gl2: level mismatch");
  const GL2ModN ginv = g.inverse();
  LevelFunction<R> out(phi.level(), phi.context());
  for (long long x = 0; x < phi.level(); ++x)
    for (long long y = 0; y < phi.level(); ++y) {
      auto [u, v] = ginv.apply(x, y);
      out(x, y) = phi(u, v);
    }
  return out;
}

template <class R>
LevelFunction<R> transpose(const LevelFunction<R>& phi) {
  LevelFunction<R> out(phi.level(), phi.context());
  for (long long m = 0; m < phi.level(); ++m)
    for (long long n = 0; n < phi.level(); ++n) out(m, n) = phi(n, m);
  return out;
}

/// Values of a rational table viewed in Q(zeta_N).
LevelFunction<CycRat> lift(const LevelFunction<mpq_class>& phi);

/// Coefficientwise image in Z[zeta_N]/p^M.
LevelFunction<arith::PadicCyc> embed(const LevelFunction<CycRat>& f, arith::u64 p, int precision);
LevelFunction<arith::PadicCyc> embed(const LevelFunction<mpq_class>& f, arith::u64 p, int precision);

namespace detail {

// sum_v f(v) * zeta^{s v} for the values picked by `pick(v)`
template <class R, class Pick>
R character_sum(const typename RingTraits<R>::Context& ctx, int N, long long s, Pick pick) {
  R acc = RingTraits<R>::zero(ctx);
  for (long long v = 0; v < N; ++v) {
    const R& val = pick(v);
    if (RingTraits<R>::is_zero(val)) continue;
    acc += val * RingTraits<R>::zeta(ctx, s * v);
  }
  return acc;
}

}  // namespace detail

/// P1 phi(m, n) = sum_v phi(v, n) zeta^{m v}  (no 1/N factor).
template <class R>
LevelFunction<R> p1(const LevelFunction<R>& phi) {
  const int N = phi.level();
  LevelFunction<R> out(N, phi.context());
  for (long long m = 0; m < N; ++m)
    for (long long n = 0; n < N; ++n)
      out(m, n) = detail::character_sum<R>(phi.context(), N, m,
                                           [&](long long v) -> const R& { return phi(v, n); });
  return out;
}

/// P2 phi(m, n) = sum_v phi(m, v) zeta^{n v}.
template <class R>
LevelFunction<R> p2(const LevelFunction<R>& phi) {
  const int N = phi.level();
  LevelFunction<R> out(N, phi.context());
  for (long long m = 0; m < N; ++m)
    for (long long n = 0; n < N; ++n)
      out(m, n) = detail::character_sum<R>(phi.context(), N, n,
                                           [&](long long v) -> const R& { return phi(m, v); });
  return out;
}

/// Symplectic transform: (1/N) sum_{u,v} phi(u, v) zeta^{u n - m v}.
template <class R>
LevelFunction<R> symplectic_hat(const LevelFunction<R>& phi) {
  const int N = phi.level();
  const auto& ctx = phi.context();
  const R inv_n = RingTraits<R>::from_rational(ctx, arith::rat(1, N));
  LevelFunction<R> out(N, ctx);
  for (long long m = 0; m < N; ++m)
    for (long long n = 0; n < N; ++n) {
      R acc = RingTraits<R>::zero(ctx);
      for (long long u = 0; u < N; ++u)
        for (long long v = 0; v < N; ++v) {
          const R& val = phi(u, v);
          if (RingTraits<R>::is_zero(val)) continue;
          acc += val * RingTraits<R>::zeta(ctx, u * n - m * v);
        }
      out(m, n) = acc * inv_n;
    }
  return out;
}

inline LevelFunction<CycRat> p1(const LevelFunction<mpq_class>& phi) { return p1(lift(phi)); }
inline LevelFunction<CycRat> p2(const LevelFunction<mpq_class>& phi) { return p2(lift(phi)); }
inline LevelFunction<CycRat> symplectic_hat(const LevelFunction<mpq_class>& phi) {
  return symplectic_hat(lift(phi));
}

/// The function f = P1(hat(g phi)) that feeds Katz's Phi for the component g.
LevelFunction<CycRat> katz_datum(const LevelFunction<mpq_class>& phi, const GL2ModN& g);

}  // namespace eiskron::level
