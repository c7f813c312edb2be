#pragma once

#include <gmpxx.h>

#include <string>
#include <type_traits>

#include "eiskron/arith/cyclotomic.hpp"
#include "eiskron/arith/padic_cyc.hpp"

namespace eiskron::arith {

/// Uniform access to the three coefficient rings used by the generic
/// series and level-function code: Q (mpq_class), Q(zeta_N) and
/// Z[zeta_N]/p^M. A Context is whatever is needed to mint constants.
template <class R>
struct RingTraits;

template <>
struct RingTraits<mpq_class> {
  struct Context {
    friend bool operator==(const Context&, const Context&) = default;
  };
  static Context context(const mpq_class&) { return {}; }
  static mpq_class zero(const Context&) { return 0; }
  static mpq_class from_int(const Context&, long long v) { return mpq_class(mpz_class(static_cast<long>(v))); }
  static mpq_class from_rational(const Context&, const mpq_class& q) { return q; }
  static bool is_zero(const mpq_class& x) { return x == 0; }
  static mpq_class sigma(const mpq_class& x, long long) { return x; }
  static std::string describe(const Context&) { return "Q"; }
};

template <>
struct RingTraits<CycRat> {
  using Context = FieldPtr;
  static Context context(const CycRat& x) { return x.field(); }
  static CycRat zero(const Context& c) { return CycRat(c); }
  static CycRat from_int(const Context& c, long long v) {
    return CycRat::from_rational(c, mpq_class(mpz_class(static_cast<long>(v))));
  }
  static CycRat from_rational(const Context& c, const mpq_class& q) {
    return CycRat::from_rational(c, q);
  }
  static CycRat zeta(const Context& c, long long j) { return CycRat::zeta(c, j); }
  static bool is_zero(const CycRat& x) { return x.is_zero(); }
  static CycRat sigma(const CycRat& x, long long p) { return x.sigma(p); }
  static int level(const Context& c) { return c->level(); }
  static std::string describe(const Context& c) {
    return "Q(zeta_" + std::to_string(c->level()) + ")";
  }
};

template <>
struct RingTraits<PadicCyc> {
  struct Context {
    FieldPtr field;
    u64 p;
    int precision;
    friend bool operator==(const Context& a, const Context& b) {
      return a.field->level() == b.field->level() && a.p == b.p &&
             a.precision == b.precision;
    }
  };
  static Context context(const PadicCyc& x) { return {x.field(), x.prime(), x.precision()}; }
  static PadicCyc zero(const Context& c) { return PadicCyc(c.field, c.p, c.precision); }
  static PadicCyc from_int(const Context& c, long long v) {
    return PadicCyc::from_int(c.field, c.p, c.precision, v);
  }
  static PadicCyc from_rational(const Context& c, const mpq_class& q) {
    return PadicCyc::from_rational(c.field, c.p, c.precision, q);
  }
  static PadicCyc zeta(const Context& c, long long j) {
    return PadicCyc::zeta(c.field, c.p, c.precision, j);
  }
  static bool is_zero(const PadicCyc& x) { return x.is_zero(); }
  /// The Frobenius of Z_p[zeta_N] is tied to the element's own prime.
  static PadicCyc sigma(const PadicCyc& x, long long) { return x.sigma(); }
  static int level(const Context& c) { return c.field->level(); }
  static std::string describe(const Context& c) {
    return "Z[zeta_" + std::to_string(c.field->level()) + "]/" + std::to_string(c.p) +
           "^" + std::to_string(c.precision);
  }
};

/// n/d in lowest terms.
inline mpq_class rat(const mpz_class& n, const mpz_class& d) {
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}
inline mpq_class rat(long long n, long long d) {
  return rat(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(d)));
}

/// Integer power with sign, d^e for e >= 0.
inline mpz_class ipow(long long base, unsigned e) {
  mpz_class r;
  mpz_class b(static_cast<long>(base));
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

/// x * n for an arbitrary-size integer n, in any of the rings.
template <class R>
R scale_int(const R& x, const mpz_class& n) {
  if constexpr (std::is_same_v<R, PadicCyc>) {
    return x.scaled(mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(x.modulus())));
  } else {
    return x * mpq_class(n);
  }
}

}  // namespace eiskron::arith
