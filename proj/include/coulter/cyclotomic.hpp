// cyclotomic.hpp
//
// Exact arithmetic in Z[zeta_p], zeta_p a primitive p-th root of unity.
// Values are integer coordinate vectors over the power basis
// {zeta^0, ..., zeta^{p-2}}; zeta^{p-1} is always rewritten as
// -(1 + zeta + ... + zeta^{p-2}). The basis is free, so two values are
// equal iff their coordinate vectors are equal — character sums can be
// compared bit-exactly with no floating point anywhere.
//
// All arithmetic is overflow-checked; coefficients are capped at 2^62 and
// a violation throws OverflowError rather than wrapping.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coulter/numeric.hpp"

namespace coulter {

class CycInt {
public:
    // Zero element of Z[zeta_p].
    explicit CycInt(i64 p);

    // The rational integer n.
    static CycInt integer(i64 p, i64 n);

    // Canonical form of zeta^k, 0 <= k < p.
    static CycInt zeta_pow(i64 p, i64 k);

    // sum over k in [0, p) of buckets[k] * zeta^k, reduced to the basis.
    // The workhorse for enumeration oracles that accumulate exponent
    // counts and convert once.
    static CycInt from_zeta_buckets(i64 p, std::span<const i64> buckets);

    i64 p() const { return p_; }
    const std::vector<i64>& coeffs() const { return c_; }

    CycInt operator+(const CycInt& o) const;
    CycInt operator-(const CycInt& o) const;
    CycInt operator-() const;
    CycInt operator*(const CycInt& o) const;
    CycInt scaled(i64 n) const;

    // Image under zeta -> zeta^{-1}; a ring automorphism (complex
    // conjugation on the embedded values).
    CycInt conj() const;

    // n when the value is the rational integer n, else nullopt.
    std::optional<i64> as_integer() const;

    bool is_zero() const;
    bool operator==(const CycInt& o) const;
    bool operator!=(const CycInt& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    void check_same_p(const CycInt& o) const;

    i64 p_;
    std::vector<i64> c_;  // length p-1
};

// G = sum over t in F_p^* of legendre(t|p) * zeta^t. Satisfies
// G^2 = legendre(-1|p) * p and G * conj(G) = p.
struct GaussSumSymbolic {
    i64 p;
    CycInt value;
};

GaussSumSymbolic gauss_sum_prime(i64 p);

}  // namespace coulter
