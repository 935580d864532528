// field.hpp
//
// Exact arithmetic in GF(p^e) for odd primes p. A FieldCtx fixes one
// concrete model of the field: the lexicographically smallest monic
// irreducible modulus polynomial of degree e over F_p, a primitive element
// theta, and precomputed trace data. Construction is deterministic: the
// same (p, e) always produces the identical context, so encodings are
// stable across runs.
//
// Elements are coefficient vectors over F_p in the polynomial basis
// {1, x, ..., x^{e-1}}, entries kept canonically in [0, p). The integer
// encoding of an element is sum(coeffs[i] * p^i), used everywhere a
// deterministic order over field elements is needed.

#pragma once

#include <cstdint>
#include <vector>

#include "coulter/numeric.hpp"

namespace coulter {

struct FqElem {
    std::vector<i64> coeffs;  // length e, entries in [0, p)
    std::uint32_t ctx_id = 0;

    bool operator==(const FqElem& other) const {
        return ctx_id == other.ctx_id && coeffs == other.coeffs;
    }
    bool operator!=(const FqElem& other) const { return !(*this == other); }
};

class FieldCtx {
public:
    // Deterministic construction; see class comment. Throws NotPrimeError,
    // EvenPrimeError, DegreeZeroError.
    static FieldCtx build(i64 p, int e);

    i64 p() const { return p_; }
    int e() const { return e_; }
    i64 q() const { return q_; }
    std::uint32_t id() const { return id_; }

    // Monic modulus, length e+1, constant term first, leading coeff 1.
    const std::vector<i64>& modulus() const { return modulus_; }
    const FqElem& theta() const { return theta_; }
    // Tr(x^i) for i in [0, e).
    const std::vector<i64>& trace_basis() const { return trace_basis_; }

    FqElem zero() const;
    FqElem one() const;
    // Normalizes entries mod p; pads/truncates to length e is an error.
    FqElem from_coeffs(std::vector<i64> coeffs) const;
    FqElem from_encoding(i64 enc) const;
    i64 encoding(const FqElem& a) const;
    bool is_zero(const FqElem& a) const;

    FqElem add(const FqElem& a, const FqElem& b) const;
    FqElem sub(const FqElem& a, const FqElem& b) const;
    FqElem neg(const FqElem& a) const;
    FqElem mul(const FqElem& a, const FqElem& b) const;
    FqElem inv(const FqElem& a) const;  // DivisionByZeroError on zero
    FqElem pow(const FqElem& a, u64 exp) const;

    // a^{p^k}; k reduced mod e.
    FqElem frobenius(const FqElem& a, int k) const;
    // Absolute trace onto F_p, O(e) via the precomputed basis traces.
    i64 trace(const FqElem& a) const;
    // Quadratic character of F_q: 0 on zero, else +/-1.
    int quad_char(const FqElem& a) const;
    // Constant-polynomial embedding F_p -> F_q (ring homomorphism).
    FqElem embed_prime(i64 y) const;

    // x * frobenius(x, alpha), i.e. x^{p^alpha + 1}.
    FqElem power_map(const FqElem& a, int alpha) const;

private:
    FieldCtx() = default;
    void check_ctx(const FqElem& a) const;

    i64 p_ = 0;
    int e_ = 0;
    i64 q_ = 0;
    std::uint32_t id_ = 0;
    std::vector<i64> modulus_;
    std::vector<i64> trace_basis_;
    // Column j holds the coefficients of (x^j)^p mod modulus.
    std::vector<std::vector<i64>> frob_matrix_;
    FqElem theta_;
};

// Legendre symbol on F_p with 0 -> 0; the prime-field quadratic character.
inline int quad_char_prime(i64 y, i64 p) { return legendre(y, p); }

}  // namespace coulter
