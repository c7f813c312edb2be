#include "eiskron/arith/padic_cyc.hpp"

#include <string>

#include "eiskron/errors.hpp"

namespace eiskron::arith {

void validate_padic_parameters(int level, u64 p, int precision) {
  if (p == 2 || !is_prime(p))
    throw ParameterError("p must be an odd prime, got " + std::to_string(p));
  if (level % static_cast<long long>(p) == 0)
    throw ParameterError("p must not divide the level");
  if (precision < 1) throw ParameterError("p-adic precision must be >= 1");
  ipow_checked(p, precision);
}

PadicCyc::PadicCyc(FieldPtr field, u64 p, int precision)
    : field_(std::move(field)),
      p_(p),
      prec_(precision),
      mod_(ipow_checked(p, precision)),
      c_(field_->degree(), 0) {
  if (precision < 1) throw ParameterError("p-adic precision must be >= 1");
}

PadicCyc PadicCyc::from_int(FieldPtr field, u64 p, int precision, long long v) {
  PadicCyc r(std::move(field), p, precision);
  r.c_[0] = reduce_signed(v, r.mod_);
  return r;
}

namespace {

u64 rational_mod(const mpq_class& q, u64 p, u64 mod) {
  if (mpz_divisible_ui_p(q.get_den_mpz_t(), static_cast<unsigned long>(p)))
    throw NotPIntegral("not p-integral: " + q.get_str() + " at p = " +
                       std::to_string(p));
  mpz_class num = q.get_num();
  u64 n = mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(mod));
  u64 d = mpz_fdiv_ui(q.get_den_mpz_t(), static_cast<unsigned long>(mod));
  return mulmod(n, inverse_mod(static_cast<long long>(d), mod), mod);
}

}  // namespace

PadicCyc PadicCyc::from_rational(FieldPtr field, u64 p, int precision,
                                 const mpq_class& q) {
  PadicCyc r(std::move(field), p, precision);
  r.c_[0] = rational_mod(q, p, r.mod_);
  return r;
}

PadicCyc PadicCyc::zeta(FieldPtr field, u64 p, int precision, long long j) {
  PadicCyc r(field, p, precision);
  const auto& pw = field->zeta_power(j);
  for (int i = 0; i < field->degree(); ++i) r.c_[i] = reduce_signed(pw[i], r.mod_);
  return r;
}

PadicCyc PadicCyc::embed(const CycRat& a, u64 p, int precision) {
  PadicCyc r(a.field(), p, precision);
  for (std::size_t i = 0; i < r.c_.size(); ++i)
    r.c_[i] = rational_mod(a.coeffs()[i], p, r.mod_);
  return r;
}

PadicCyc PadicCyc::with_precision(int precision) const {
  if (precision > prec_)
    throw PrecisionError("cannot raise precision from " + std::to_string(prec_) +
                         " to " + std::to_string(precision));
  PadicCyc r(field_, p_, precision);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] % r.mod_;
  return r;
}

bool PadicCyc::is_zero() const {
  for (u64 c : c_)
    if (c != 0) return false;
  return true;
}

int PadicCyc::valuation() const {
  int v = prec_;
  for (u64 c : c_)
    if (c != 0) v = std::min(v, arith::valuation(c, p_, prec_));
  return v;
}

void PadicCyc::align(const PadicCyc& o) {
  if (field_->level() != o.field_->level() || p_ != o.p_)
    throw ParameterError("PadicCyc operands differ in level or prime");
  if (o.prec_ < prec_) *this = with_precision(o.prec_);
}

PadicCyc& PadicCyc::operator+=(const PadicCyc& o) {
  align(o);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    u64 s = c_[i] + o.c_[i] % mod_;
    c_[i] = s >= mod_ ? s - mod_ : s;
  }
  return *this;
}

PadicCyc& PadicCyc::operator-=(const PadicCyc& o) {
  align(o);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    u64 b = o.c_[i] % mod_;
    c_[i] = c_[i] >= b ? c_[i] - b : c_[i] + mod_ - b;
  }
  return *this;
}

PadicCyc operator*(const PadicCyc& a, const PadicCyc& b) {
  PadicCyc lhs = a;
  lhs.align(b);
  const u64 m = lhs.mod_;
  const int deg = lhs.field_->degree();
  std::vector<u64> prod(2 * deg - 1, 0);
  for (int i = 0; i < deg; ++i) {
    if (lhs.c_[i] == 0) continue;
    for (int j = 0; j < deg; ++j) {
      u64 bj = b.c_[j] % m;
      if (bj == 0) continue;
      u64 t = prod[i + j] + mulmod(lhs.c_[i], bj, m);
      prod[i + j] = t >= m ? t - m : t;
    }
  }
  PadicCyc r(lhs.field_, lhs.p_, lhs.prec_);
  for (int j = 0; j < 2 * deg - 1; ++j) {
    if (prod[j] == 0) continue;
    if (j < deg) {
      u64 t = r.c_[j] + prod[j];
      r.c_[j] = t >= m ? t - m : t;
      continue;
    }
    const auto& pw = r.field_->zeta_power(j);
    for (int i = 0; i < deg; ++i) {
      if (pw[i] == 0) continue;
      u64 t = r.c_[i] + mulmod(prod[j], reduce_signed(pw[i], m), m);
      r.c_[i] = t >= m ? t - m : t;
    }
  }
  return r;
}

PadicCyc& PadicCyc::operator*=(const PadicCyc& o) { return *this = *this * o; }

PadicCyc& PadicCyc::operator*=(long long s) { return *this = scaled(reduce_signed(s, mod_)); }

PadicCyc PadicCyc::scaled(u64 s) const {
  PadicCyc r(*this);
  s %= mod_;
  for (auto& c : r.c_) c = mulmod(c, s, mod_);
  return r;
}

PadicCyc PadicCyc::operator-() const {
  PadicCyc r(*this);
  for (auto& c : r.c_) c = c == 0 ? 0 : mod_ - c;
  return r;
}

bool operator==(const PadicCyc& a, const PadicCyc& b) {
  if (a.level() != b.level() || a.p_ != b.p_) return false;
  const u64 m = a.prec_ <= b.prec_ ? a.mod_ : b.mod_;
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i] % m != b.c_[i] % m) return false;
  return true;
}

PadicCyc PadicCyc::sigma() const {
  const int N = level();
  const int deg = field_->degree();
  PadicCyc r(field_, p_, prec_);
  for (int j = 0; j < deg; ++j) {
    if (c_[j] == 0) continue;
    const auto& pw = field_->zeta_power(static_cast<long long>(p_ % N) * j);
    for (int i = 0; i < deg; ++i) {
      if (pw[i] == 0) continue;
      u64 t = r.c_[i] + mulmod(c_[j], reduce_signed(pw[i], mod_), mod_);
      r.c_[i] = t >= mod_ ? t - mod_ : t;
    }
  }
  return r;
}

PadicCyc PadicCyc::divide_by_p_power(int e) const {
  if (e == 0) return *this;
  if (e >= prec_)
    throw PrecisionError("dividing by p^" + std::to_string(e) +
                         " leaves no precision at M = " + std::to_string(prec_));
  const u64 pe = ipow_checked(p_, e);
  PadicCyc r(field_, p_, prec_ - e);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] % pe != 0)
      throw PrecisionError("coefficient not divisible by p^" + std::to_string(e));
    r.c_[i] = (c_[i] / pe) % r.mod_;
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const PadicCyc& a) {
  os << '[';
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    os << (i ? ", " : "") << a.coeffs()[i];
  return os << "] mod " << a.prime() << '^' << a.precision();
}

}  // namespace eiskron::arith
