#pragma once

#include <cstdint>

namespace eiskron::arith {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

bool is_prime(u64 n);

/// p^e, throws ParameterError if the result does not fit below 2^62.
u64 ipow_checked(u64 p, int e);

inline u64 mulmod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

/// Canonical representative of x in [0, m).
u64 reduce_signed(long long x, u64 m);

u64 powmod(u64 base, u64 exp, u64 m);

/// Inverse of u modulo p^M; throws ParameterError("non-unit") when p | u.
u64 invert_mod(long long u, u64 p, int M);

/// Inverse modulo an arbitrary m; throws ParameterError if gcd(u, m) != 1.
u64 inverse_mod(long long u, u64 m);

/// p-adic valuation of a nonzero integer; returns `cap` for zero.
int valuation(u64 x, u64 p, int cap);

long long floor_mod(long long a, long long n);

}  // namespace eiskron::arith
