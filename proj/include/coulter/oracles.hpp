// oracles.hpp
//
// Brute-force evaluation of every sum and set by full enumeration of
// GF(p^e), producing exact CycInt or integer values. These are the ground
// truth the closed forms are verified against, so they stay as close to
// the defining expressions as performance allows; the one refactoring
// (histogramming trace values instead of summing roots of unity per x)
// is itself cross-checked against naive triple loops in the test suite.
//
// Enumeration is gated by a ceiling on q (default 200000, overridable via
// the COULTER_MAX_Q environment variable); exceeding it throws
// EnumerationCeilingError. Closed forms have no such ceiling.

#pragma once

#include <vector>

#include "coulter/cyclotomic.hpp"
#include "coulter/field.hpp"
#include "coulter/sum_spec.hpp"

namespace coulter {

// Effective ceiling: COULTER_MAX_Q if set, else 200000.
i64 enumeration_ceiling();

// Discrete-log and trace tables for one context, built once and shared by
// every oracle over that field. Index space is the integer encoding.
class EnumTables {
public:
    explicit EnumTables(const FieldCtx& ctx);

    const FieldCtx& ctx() const { return *ctx_; }
    i64 q() const { return ctx_->q(); }

    // log_of[enc] for enc != 0; exp_of[k] = encoding of theta^k.
    i64 log_of(i64 enc) const { return log_[static_cast<size_t>(enc)]; }
    i64 exp_of(i64 k) const { return exp_[static_cast<size_t>(k)]; }
    i64 trace_of(i64 enc) const { return trace_[static_cast<size_t>(enc)]; }

    i64 mul_enc(i64 a, i64 b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[static_cast<size_t>((log_[static_cast<size_t>(a)] + log_[static_cast<size_t>(b)]) % (q() - 1))];
    }
    // Quadratic character by log parity.
    int quad_char_enc(i64 enc) const {
        if (enc == 0) return 0;
        return (log_[static_cast<size_t>(enc)] & 1) ? -1 : 1;
    }

    // Encoding of x^{p^alpha + 1} for every x, via exponent arithmetic.
    std::vector<i64> power_map_table(int alpha) const;

    // Tr(x^{p^alpha + 1}) for every x.
    std::vector<i64> trace_power_table(int alpha) const;

private:
    const FieldCtx* ctx_;
    std::vector<i64> log_;
    std::vector<i64> exp_;
    std::vector<i64> trace_;
};

// h[t] = #{x in F_q : Tr(x^{p^alpha+1}) = t}, length p.
std::vector<i64> trace_power_histogram(const EnumTables& tab, int alpha);

// H[s][u] = #{x : Tr(x^{p^alpha+1}) = s and Tr(bx) = u}, p x p.
std::vector<std::vector<i64>> joint_histogram(const EnumTables& tab, int alpha, const FqElem& b);

// sum over x of zeta^{Tr(a x^{p^alpha+1} + b x)}; a nonzero, b arbitrary.
// The second form reuses a precomputed power_map_table(alpha).
CycInt oracle_weil(const EnumTables& tab, int alpha, const FqElem& a, const FqElem& b);
CycInt oracle_weil_with_table(const EnumTables& tab, const std::vector<i64>& power_map,
                              const FqElem& a, const FqElem& b);

// sum over y in F_p^* of zeta^{-a y} sum over x of zeta^{y Tr(x^{p^alpha+1})}.
CycInt oracle_A(const EnumTables& tab, int alpha, i64 a_fp);
CycInt oracle_A_from_histogram(i64 p, i64 a_fp, const std::vector<i64>& h);

// Double sum over y, z in F_p^* with phases -ay - cz; b nonzero. The
// batched form evaluates all (a, c) in F_p x F_p from one joint histogram.
CycInt oracle_B(const EnumTables& tab, int alpha, i64 a_fp, i64 c_fp, const FqElem& b);
std::vector<std::vector<CycInt>> oracle_B_all_from_histogram(i64 p, const std::vector<std::vector<i64>>& H);

// Quadratic Gauss sum over F_q: sum over x != 0 of eta(x) zeta^{Tr(x)}.
CycInt oracle_gauss_q(const EnumTables& tab);

// sum over x of zeta^{Tr(a2 x^2 + a1 x + a0)}; a2 nonzero.
CycInt oracle_quadratic_sum(const EnumTables& tab, const FqElem& a2, const FqElem& a1, const FqElem& a0);

// D_alpha(a) = {x : Tr(x^{p^alpha+1}) = a}, elements in encoding order.
std::vector<FqElem> enumerate_D(const EnumTables& tab, int alpha, i64 a_fp);
i64 count_n(const EnumTables& tab, int alpha, i64 a_fp);

// M_alpha(a,c) = {x : Tr(x^{p^alpha+1}) = a and Tr(bx) = c}; b nonzero.
std::vector<FqElem> enumerate_M(const EnumTables& tab, int alpha, i64 a_fp, i64 c_fp, const FqElem& b);
i64 count_N(const EnumTables& tab, int alpha, i64 a_fp, i64 c_fp, const FqElem& b);

// Exact oracle value of a parameterized instance; as_int is populated
// exactly when the value is a rational integer (always, for the counting
// kinds). Validates the instance first.
struct OracleValue {
    CycInt cyc;
    std::optional<i64> as_int;
};

OracleValue evaluate_oracle(const EnumTables& tab, const SumSpec& spec);

}  // namespace coulter
