#include "eiskron/arith/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <string>

#include "eiskron/arith/modular.hpp"
#include "eiskron/errors.hpp"

namespace eiskron::arith {

int euler_phi(int n) {
  int result = n;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0) n /= d;
      result -= result / d;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

// exact division of a by monic b, both ascending
std::vector<long long> divide_exact(std::vector<long long> a,
                                    const std::vector<long long>& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  std::vector<long long> q(da - db + 1, 0);
  for (int i = da; i >= db; --i) {
    long long c = a[i];
    q[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
  }
  return q;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(int n) {
  if (n < 1) throw ParameterError("cyclotomic polynomial needs n >= 1");
  std::vector<long long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) poly = divide_exact(poly, cyclotomic_polynomial(d));
  return poly;
}

CyclotomicField::CyclotomicField(int level)
    : level_(level), degree_(euler_phi(level)), modulus_(cyclotomic_polynomial(level)) {
  // x^j mod Phi_N for j = 0..N-1, by repeated multiplication by x
  zeta_powers_.reserve(level_);
  std::vector<long long> cur(degree_, 0);
  cur[0] = 1;
  for (int j = 0; j < level_; ++j) {
    zeta_powers_.push_back(cur);
    long long top = cur[degree_ - 1];
    for (int i = degree_ - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (int i = 0; i < degree_; ++i) cur[i] -= top * modulus_[i];
  }
}

std::shared_ptr<const CyclotomicField> CyclotomicField::get(int level) {
  if (level < 1) throw ParameterError("level must be positive");
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CyclotomicField>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[level];
  if (!slot) slot = std::make_shared<const CyclotomicField>(level);
  return slot;
}

const std::vector<long long>& CyclotomicField::zeta_power(long long j) const {
  return zeta_powers_[static_cast<std::size_t>(floor_mod(j, level_))];
}

CycRat::CycRat(FieldPtr field) : field_(std::move(field)), coeffs_(field_->degree()) {}

CycRat::CycRat(FieldPtr field, std::vector<mpq_class> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (static_cast<int>(coeffs_.size()) != field_->degree())
    throw ParameterError("CycRat coefficient vector must have length phi(N)");
}

CycRat CycRat::from_rational(FieldPtr field, const mpq_class& q) {
  CycRat r(std::move(field));
  r.coeffs_[0] = q;
  return r;
}

CycRat CycRat::zeta(FieldPtr field, long long j) {
  CycRat r(field);
  const auto& pw = field->zeta_power(j);
  for (int i = 0; i < field->degree(); ++i) r.coeffs_[i] = static_cast<long>(pw[i]);
  return r;
}

CycRat CycRat::from_poly(FieldPtr field, const std::vector<mpq_class>& poly) {
  CycRat r(field);
  const int deg = field->degree();
  for (std::size_t j = 0; j < poly.size(); ++j) {
    if (poly[j] == 0) continue;
    if (static_cast<int>(j) < deg) {
      r.coeffs_[j] += poly[j];
    } else {
      const auto& pw = field->zeta_power(static_cast<long long>(j));
      for (int i = 0; i < deg; ++i)
        if (pw[i] != 0) r.coeffs_[i] += poly[j] * static_cast<long>(pw[i]);
    }
  }
  return r;
}

bool CycRat::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool CycRat::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

void CycRat::check_same_field(const CycRat& o) const {
  if (field_->level() != o.field_->level())
    throw ParameterError("CycRat level mismatch: " + std::to_string(level()) +
                         " vs " + std::to_string(o.level()));
}

CycRat& CycRat::operator+=(const CycRat& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycRat& CycRat::operator-=(const CycRat& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycRat operator*(const CycRat& a, const CycRat& b) {
  a.check_same_field(b);
  const int deg = a.field_->degree();
  std::vector<mpq_class> prod(2 * deg - 1);
  for (int i = 0; i < deg; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < deg; ++j)
      if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CycRat::from_poly(a.field_, prod);
}

CycRat& CycRat::operator*=(const CycRat& o) { return *this = *this * o; }

CycRat& CycRat::operator*=(const mpq_class& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

CycRat CycRat::operator-() const {
  CycRat r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const CycRat& a, const CycRat& b) {
  return a.level() == b.level() && a.coeffs_ == b.coeffs_;
}

CycRat CycRat::sigma(long long p) const {
  if (std::gcd(p, static_cast<long long>(level())) != 1)
    throw ParameterError("sigma: p must be prime to N");
  std::vector<mpq_class> poly(static_cast<std::size_t>(level()));
  for (std::size_t j = 0; j < coeffs_.size(); ++j)
    if (coeffs_[j] != 0)
      poly[floor_mod(p * static_cast<long long>(j), level())] += coeffs_[j];
  return from_poly(field_, poly);
}

std::complex<double> CycRat::to_complex() const {
  std::complex<double> z{0.0, 0.0};
  const double step = 2.0 * std::numbers::pi / level();
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    z += coeffs_[j].get_d() * std::polar(1.0, step * static_cast<double>(j));
  }
  return z;
}

std::ostream& operator<<(std::ostream& os, const CycRat& a) {
  os << '[';
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    os << (i ? ", " : "") << a.coeffs()[i];
  return os << ']';
}

}  // namespace eiskron::arith
