#include "eiskron/arith/modular.hpp"

#include <string>

#include "eiskron/errors.hpp"

namespace eiskron::arith {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 ipow_checked(u64 p, int e) {
  constexpr u64 limit = u64{1} << 62;
  u64 r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > limit / p)
      throw ParameterError("p^M = " + std::to_string(p) + "^" +
                           std::to_string(e) + " exceeds 2^62");
    r *= p;
  }
  return r;
}

u64 reduce_signed(long long x, u64 m) {
  if (x >= 0) return static_cast<u64>(x) % m;
  // -(x+1) avoids overflow at LLONG_MIN
  u64 neg = static_cast<u64>(-(x + 1)) % m;
  return (m - 1 - neg) % m;
}

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 inverse_mod(long long u, u64 m) {
  // extended Euclid on signed 128-bit to stay exact
  __int128 a = static_cast<__int128>(reduce_signed(u, m));
  __int128 b = static_cast<__int128>(m);
  __int128 x0 = 1, x1 = 0;
  while (b != 0) {
    __int128 q = a / b;
    __int128 t = a - q * b;
    a = b;
    b = t;
    t = x0 - q * x1;
    x0 = x1;
    x1 = t;
  }
  if (a != 1) throw ParameterError("non-unit: " + std::to_string(u));
  __int128 r = x0 % static_cast<__int128>(m);
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

u64 invert_mod(long long u, u64 p, int M) {
  if (reduce_signed(u, p) == 0)
    throw ParameterError("non-unit: " + std::to_string(u) + " is divisible by " +
                         std::to_string(p));
  return inverse_mod(u, ipow_checked(p, M));
}

int valuation(u64 x, u64 p, int cap) {
  if (x == 0) return cap;
  int v = 0;
  while (x % p == 0 && v < cap) {
    x /= p;
    ++v;
  }
  return v;
}

long long floor_mod(long long a, long long n) {
  long long r = a % n;
  return r < 0 ? r + n : r;
}

}  // namespace eiskron::arith
