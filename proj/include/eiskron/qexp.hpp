#pragma once

#include <algorithm>
#include <vector>

#include "eiskron/arith/ring.hpp"
#include "eiskron/errors.hpp"

namespace eiskron::qexp {

using arith::RingTraits;

/// Truncated power series a_0 + a_1 q + ... + a_Q q^Q over R.
///
/// Two expansions are compared up to the smaller q-precision (and, for
/// Z[zeta_N]/p^M, the smaller p-adic precision): the q-expansion principle
/// is the only notion of equality used for modular forms here.
template <class R>
class QExpansion {
 public:
  using Context = typename RingTraits<R>::Context;

  QExpansion(Context ctx, std::size_t q_prec)
      : ctx_(ctx), c_(q_prec + 1, RingTraits<R>::zero(ctx)) {
    if (q_prec < 1) throw ParameterError("q-precision must be >= 1");
  }
  QExpansion(Context ctx, std::vector<R> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
    if (c_.size() < 2) throw ParameterError("q-precision must be >= 1");
  }

  std::size_t q_prec() const { return c_.size() - 1; }
  const Context& context() const { return ctx_; }
  const std::vector<R>& coeffs() const { return c_; }
  const R& operator[](std::size_t n) const { return c_[n]; }
  R& operator[](std::size_t n) { return c_[n]; }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const R& x) { return RingTraits<R>::is_zero(x); });
  }

  QExpansion truncated(std::size_t q_prec) const {
    return QExpansion(ctx_, std::vector<R>(c_.begin(), c_.begin() + std::min(q_prec, this->q_prec()) + 1));
  }

  QExpansion& operator+=(const QExpansion& o) {
    shrink_to(o.q_prec());
    for (std::size_t n = 0; n < c_.size(); ++n) c_[n] += o.c_[n];
    return *this;
  }
  QExpansion& operator-=(const QExpansion& o) {
    shrink_to(o.q_prec());
    for (std::size_t n = 0; n < c_.size(); ++n) c_[n] -= o.c_[n];
    return *this;
  }
  friend QExpansion operator+(QExpansion a, const QExpansion& b) { return a += b; }
  friend QExpansion operator-(QExpansion a, const QExpansion& b) { return a -= b; }
  QExpansion operator-() const {
    QExpansion r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }

  /// Coefficientwise scalar multiple.
  template <class S>
  QExpansion scaled(const S& s) const {
    QExpansion r(*this);
    for (auto& x : r.c_) x = x * s;
    return r;
  }

  /// Apply f to every coefficient.
  template <class F>
  auto map(F&& f) const {
    using T = std::decay_t<decltype(f(c_[0]))>;
    std::vector<T> out;
    out.reserve(c_.size());
    for (const auto& x : c_) out.push_back(f(x));
    auto ctx = RingTraits<T>::context(out[0]);
    return QExpansion<T>(std::move(ctx), std::move(out));
  }

  friend bool operator==(const QExpansion& a, const QExpansion& b) {
    const std::size_t q = std::min(a.q_prec(), b.q_prec());
    for (std::size_t n = 0; n <= q; ++n)
      if (!(a.c_[n] == b.c_[n])) return false;
    return true;
  }

 private:
  void shrink_to(std::size_t q) {
    if (q < q_prec()) c_.resize(q + 1, RingTraits<R>::zero(ctx_));
  }

  Context ctx_;
  std::vector<R> c_;
};

/// Cauchy product truncated at the smaller q-precision.
template <class R>
QExpansion<R> qexp_mul(const QExpansion<R>& a, const QExpansion<R>& b) {
  const std::size_t q = std::min(a.q_prec(), b.q_prec());
  QExpansion<R> r(a.context(), q);
  for (std::size_t i = 0; i <= q; ++i) {
    if (RingTraits<R>::is_zero(a[i])) continue;
    for (std::size_t j = 0; i + j <= q; ++j)
      if (!RingTraits<R>::is_zero(b[j])) r[i + j] += a[i] * b[j];
  }
  return r;
}

/// theta = q d/dq: a_n -> n a_n.
template <class R>
QExpansion<R> theta(const QExpansion<R>& a) {
  QExpansion<R> r(a);
  for (std::size_t n = 0; n <= a.q_prec(); ++n)
    r[n] = arith::scale_int(a[n], mpz_class(static_cast<unsigned long>(n)));
  return r;
}

/// F(q) -> F(q^p), keeping the q-precision Q (terms beyond Q/p drop out).
template <class R>
QExpansion<R> frob_q(const QExpansion<R>& a, long long p) {
  if (p < 1) throw ParameterError("frob_q needs p >= 1");
  QExpansion<R> r(a.context(), a.q_prec());
  for (std::size_t n = 0; n * static_cast<std::size_t>(p) <= a.q_prec(); ++n)
    r[n * static_cast<std::size_t>(p)] = a[n];
  return r;
}

/// sigma on every coefficient.
template <class R>
QExpansion<R> sigma(const QExpansion<R>& a, long long p) {
  return a.map([p](const R& x) { return RingTraits<R>::sigma(x, p); });
}

/// phi* = Frob (x) sigma.
template <class R>
QExpansion<R> phi_star(const QExpansion<R>& a, long long p) {
  return frob_q(sigma(a, p), p);
}

/// Coefficientwise image in Z[zeta_N]/p^M.
QExpansion<arith::PadicCyc> embed(const QExpansion<arith::CycRat>& a, arith::u64 p, int precision);

}  // namespace eiskron::qexp
