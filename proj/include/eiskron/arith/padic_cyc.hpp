#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "eiskron/arith/cyclotomic.hpp"
#include "eiskron/arith/modular.hpp"

namespace eiskron::arith {

/// Element of Z[zeta_N]/p^M, power basis, coefficients in [0, p^M).
///
/// The precision M travels with the value. Binary operations between values
/// of different precision reduce to the smaller one; mixing levels or primes
/// is a ParameterError. Only integer units are ever inverted: Phi_N may split
/// mod p, so this is a ring, not a field.
class PadicCyc {
 public:
  PadicCyc(FieldPtr field, u64 p, int precision);

  static PadicCyc from_int(FieldPtr field, u64 p, int precision, long long v);
  /// Throws NotPIntegral when p divides the denominator.
  static PadicCyc from_rational(FieldPtr field, u64 p, int precision,
                                const mpq_class& q);
  static PadicCyc zeta(FieldPtr field, u64 p, int precision, long long j);
  static PadicCyc embed(const CycRat& a, u64 p, int precision);

  const FieldPtr& field() const { return field_; }
  int level() const { return field_->level(); }
  u64 prime() const { return p_; }
  int precision() const { return prec_; }
  u64 modulus() const { return mod_; }
  const std::vector<u64>& coeffs() const { return c_; }

  PadicCyc with_precision(int precision) const;
  PadicCyc zero_like() const { return PadicCyc(field_, p_, prec_); }

  bool is_zero() const;
  /// Minimum p-adic valuation over the coefficients; precision() for zero.
  int valuation() const;

  PadicCyc& operator+=(const PadicCyc& o);
  PadicCyc& operator-=(const PadicCyc& o);
  PadicCyc& operator*=(const PadicCyc& o);
  PadicCyc& operator*=(long long s);
  PadicCyc operator-() const;

  friend PadicCyc operator+(PadicCyc a, const PadicCyc& b) { return a += b; }
  friend PadicCyc operator-(PadicCyc a, const PadicCyc& b) { return a -= b; }
  friend PadicCyc operator*(const PadicCyc& a, const PadicCyc& b);
  friend PadicCyc operator*(PadicCyc a, long long s) { return a *= s; }
  friend PadicCyc operator*(long long s, PadicCyc a) { return a *= s; }
  /// Equality at the smaller of the two precisions.
  friend bool operator==(const PadicCyc& a, const PadicCyc& b);

  /// Multiply by a unit-or-not residue already reduced mod p^M.
  PadicCyc scaled(u64 s) const;

  /// zeta -> zeta^p with this element's prime.
  PadicCyc sigma() const;

  /// Exact division by p^e; result has precision M - e.
  PadicCyc divide_by_p_power(int e) const;

 private:
  void align(const PadicCyc& o);

  FieldPtr field_;
  u64 p_;
  int prec_;
  u64 mod_;
  std::vector<u64> c_;
};

std::ostream& operator<<(std::ostream& os, const PadicCyc& a);

/// Check p odd prime, p does not divide N, M >= 1, p^M < 2^62.
void validate_padic_parameters(int level, u64 p, int precision);

}  // namespace eiskron::arith
