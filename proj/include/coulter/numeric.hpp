// numeric.hpp
//
// Small integer number theory helpers used throughout: deterministic
// Miller-Rabin primality for 64-bit inputs, Pollard rho factorization,
// modular arithmetic and the Legendre symbol.

#pragma once

#include <cstdint>
#include <vector>

namespace coulter {

using i64 = std::int64_t;
using u64 = std::uint64_t;

// Deterministic for all n < 2^64 (fixed witness set).
bool is_prime(u64 n);

// Prime factorization, ascending, with multiplicity collapsed
// (each prime listed once).
std::vector<u64> prime_factors(u64 n);

// (base^exp) mod m, m > 0. Uses 128-bit intermediate products.
u64 mod_pow(u64 base, u64 exp, u64 m);

// Inverse of a mod p for p prime, a not divisible by p.
i64 mod_inv(i64 a, i64 p);

// Canonical residue in [0, p).
inline i64 normalize_mod(i64 a, i64 p) {
    i64 r = a % p;
    return r < 0 ? r + p : r;
}

// Legendre symbol (a|p) in {-1, 0, +1}; p an odd prime.
int legendre(i64 a, i64 p);

i64 gcd_i64(i64 a, i64 b);

// p^e as i64; throws std::overflow_error if it exceeds 2^62.
i64 checked_pow_i64(i64 p, int e);

}  // namespace coulter
