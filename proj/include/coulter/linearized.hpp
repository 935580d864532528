// linearized.hpp
//
// The map x -> a^{p^alpha} x^{p^{2 alpha}} + a x on GF(p^e) is F_p-linear,
// so it is an e x e matrix over F_p in the polynomial basis. This module
// builds that matrix, decides whether the map is a bijection, and solves
// c(x) = -b^{p^alpha} by Gaussian elimination. When the solution is not
// unique, the representative with the smallest integer encoding is
// returned (the downstream closed forms are independent of the choice).

#pragma once

#include <optional>
#include <vector>

#include "coulter/field.hpp"

namespace coulter {

struct CoulterSolution {
    bool solvable = false;
    FqElem x0;           // valid iff solvable
    int kernel_dim = 0;  // 0 iff the map is a permutation
};

class LinearizedMap {
public:
    // a must be nonzero, alpha >= 1. The context must outlive the map.
    LinearizedMap(const FieldCtx& ctx, const FqElem& a, int alpha);

    const FieldCtx& ctx() const { return *ctx_; }
    int alpha() const { return alpha_; }
    const FqElem& coeff() const { return a_; }

    FqElem apply(const FqElem& x) const;

    int kernel_dim() const { return kernel_dim_; }
    bool is_permutation() const { return kernel_dim_ == 0; }

    // Solve c(x) = rhs. Unsolvable is a value, not an error.
    CoulterSolution solve(const FqElem& rhs) const;

private:
    const FieldCtx* ctx_;
    FqElem a_;
    int alpha_;
    std::vector<std::vector<i64>> matrix_;  // matrix_[row][col]
    // Row-reduced factorization computed once: pivot columns and the
    // reduced [matrix | I] block for repeated solves.
    std::vector<std::vector<i64>> rref_;  // e rows, e + e columns (augmented identity)
    std::vector<int> pivot_col_;           // pivot column per reduced row, -1 past rank
    int rank_ = 0;
    int kernel_dim_ = 0;
    std::vector<FqElem> kernel_basis_;
};

LinearizedMap build_map(const FieldCtx& ctx, const FqElem& a, int alpha);

// Solve c(x) = -b^{p^alpha} for the map's coefficient a; b nonzero.
CoulterSolution solve_coulter(const LinearizedMap& map, const FqElem& b);

// The unique gamma with gamma^{p^{2 alpha}} + gamma = -b^{p^alpha};
// requires e/gcd(alpha,e) odd (EvenEOverDError otherwise), which makes
// the a = 1 map a bijection.
FqElem gamma_for(const FieldCtx& ctx, int alpha, const FqElem& b);

// Algebraic permutation test: always true for e/d odd; for e/d even with
// e = 2m, true iff a^{(q-1)/(p^d+1)} != (-1)^{m/d}. Cross-checked against
// the rank computation in the test suite.
bool coulter_permutation_criterion(const FieldCtx& ctx, const FqElem& a, int alpha);

}  // namespace coulter
