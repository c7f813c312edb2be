#pragma once

#include <gmpxx.h>

#include <complex>
#include <memory>
#include <ostream>
#include <vector>

namespace eiskron::arith {

int euler_phi(int n);

/// N-th cyclotomic polynomial, ascending integer coefficients, monic.
std::vector<long long> cyclotomic_polynomial(int n);

/// Q(zeta_N) presented as Q[x]/(Phi_N). Instances are interned per level
/// and immutable, so they can be shared across threads.
class CyclotomicField {
 public:
  static std::shared_ptr<const CyclotomicField> get(int level);

  int level() const { return level_; }
  int degree() const { return degree_; }
  const std::vector<long long>& modulus() const { return modulus_; }

  /// x^j reduced modulo Phi_N (uses x^N = 1), length degree().
  const std::vector<long long>& zeta_power(long long j) const;

  explicit CyclotomicField(int level);

 private:
  int level_;
  int degree_;
  std::vector<long long> modulus_;
  std::vector<std::vector<long long>> zeta_powers_;
};

using FieldPtr = std::shared_ptr<const CyclotomicField>;

/// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}.
class CycRat {
 public:
  explicit CycRat(FieldPtr field);
  CycRat(FieldPtr field, std::vector<mpq_class> coeffs);

  static CycRat from_rational(FieldPtr field, const mpq_class& q);
  static CycRat zeta(FieldPtr field, long long j);
  /// Reduce an arbitrary-length polynomial in zeta.
  static CycRat from_poly(FieldPtr field, const std::vector<mpq_class>& poly);

  const FieldPtr& field() const { return field_; }
  int level() const { return field_->level(); }
  const std::vector<mpq_class>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant coefficient; equals the value when is_rational().
  const mpq_class& rational_part() const { return coeffs_[0]; }

  CycRat& operator+=(const CycRat& o);
  CycRat& operator-=(const CycRat& o);
  CycRat& operator*=(const CycRat& o);
  CycRat& operator*=(const mpq_class& s);
  CycRat operator-() const;

  friend CycRat operator+(CycRat a, const CycRat& b) { return a += b; }
  friend CycRat operator-(CycRat a, const CycRat& b) { return a -= b; }
  friend CycRat operator*(const CycRat& a, const CycRat& b);
  friend CycRat operator*(CycRat a, const mpq_class& s) { return a *= s; }
  friend CycRat operator*(const mpq_class& s, CycRat a) { return a *= s; }
  friend bool operator==(const CycRat& a, const CycRat& b);

  /// Arithmetic Frobenius zeta -> zeta^p; p must be prime to N.
  CycRat sigma(long long p) const;

  /// Image under zeta_N -> exp(2 pi i / N).
  std::complex<double> to_complex() const;

 private:
  void check_same_field(const CycRat& o) const;

  FieldPtr field_;
  std::vector<mpq_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CycRat& a);

}  // namespace eiskron::arith
