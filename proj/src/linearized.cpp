#include "coulter/linearized.hpp"

#include <algorithm>

#include "coulter/errors.hpp"

namespace coulter {

LinearizedMap::LinearizedMap(const FieldCtx& ctx, const FqElem& a, int alpha)
    : ctx_(&ctx), a_(a), alpha_(alpha) {
    if (ctx.is_zero(a)) throw ZeroCoefficientError("LinearizedMap: coefficient a must be nonzero");
    if (alpha < 1) throw CoulterError("LinearizedMap: alpha must be >= 1");

    const int e = ctx.e();
    const i64 p = ctx.p();

    // Column j = image of the basis element x^j.
    matrix_.assign(e, std::vector<i64>(e, 0));
    for (int j = 0; j < e; ++j) {
        FqElem basis = ctx.zero();
        basis.coeffs[j] = 1;
        FqElem im = apply(basis);
        for (int i = 0; i < e; ++i) matrix_[i][j] = im.coeffs[i];
    }

    // Row-reduce [M | I]; the right block turns any right-hand side into
    // reduced coordinates for repeated solves.
    rref_.assign(e, std::vector<i64>(2 * e, 0));
    for (int i = 0; i < e; ++i) {
        for (int j = 0; j < e; ++j) rref_[i][j] = matrix_[i][j];
        rref_[i][e + i] = 1;
    }
    int row = 0;
    pivot_col_.clear();
    for (int col = 0; col < e && row < e; ++col) {
        int sel = -1;
        for (int r = row; r < e; ++r) {
            if (rref_[r][col] != 0) {
                sel = r;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(rref_[row], rref_[sel]);
        i64 inv = mod_inv(rref_[row][col], p);
        for (int j = 0; j < 2 * e; ++j) rref_[row][j] = normalize_mod(rref_[row][j] * inv, p);
        for (int r = 0; r < e; ++r) {
            if (r == row || rref_[r][col] == 0) continue;
            i64 f = rref_[r][col];
            for (int j = 0; j < 2 * e; ++j) {
                rref_[r][j] = normalize_mod(rref_[r][j] - f * rref_[row][j], p);
            }
        }
        pivot_col_.push_back(col);
        ++row;
    }
    rank_ = row;
    kernel_dim_ = e - rank_;

    // Kernel basis from the free columns.
    std::vector<bool> is_pivot(e, false);
    for (int c : pivot_col_) is_pivot[c] = true;
    for (int f = 0; f < e; ++f) {
        if (is_pivot[f]) continue;
        FqElem v = ctx.zero();
        v.coeffs[f] = 1;
        for (int r = 0; r < rank_; ++r) {
            v.coeffs[pivot_col_[r]] = normalize_mod(-rref_[r][f], p);
        }
        kernel_basis_.push_back(std::move(v));
    }
}

FqElem LinearizedMap::apply(const FqElem& x) const {
    const FieldCtx& ctx = *ctx_;
    FqElem a_frob = ctx.frobenius(a_, alpha_);
    return ctx.add(ctx.mul(a_frob, ctx.frobenius(x, 2 * alpha_)), ctx.mul(a_, x));
}

CoulterSolution LinearizedMap::solve(const FqElem& rhs) const {
    const FieldCtx& ctx = *ctx_;
    const int e = ctx.e();
    const i64 p = ctx.p();

    // y = R * rhs, where R is the accumulated row-operation block.
    std::vector<i64> y(e, 0);
    for (int r = 0; r < e; ++r) {
        i64 acc = 0;
        for (int j = 0; j < e; ++j) acc = (acc + rref_[r][e + j] * rhs.coeffs[j]) % p;
        y[r] = acc;
    }
    CoulterSolution sol;
    sol.kernel_dim = kernel_dim_;
    for (int r = rank_; r < e; ++r) {
        if (y[r] != 0) {
            sol.solvable = false;
            sol.x0 = ctx.zero();
            return sol;
        }
    }
    FqElem x = ctx.zero();
    for (int r = 0; r < rank_; ++r) x.coeffs[pivot_col_[r]] = y[r];

    // Deterministic representative: smallest integer encoding in the
    // solution coset. Echelonize the kernel basis with leading entries at
    // the most significant digit positions, then zero those digits
    // greedily; full reduction makes the choices independent, so the
    // result is the lexicographic (= numeric) minimum.
    if (kernel_dim_ > 0) {
        std::vector<FqElem> basis = kernel_basis_;
        std::vector<int> lead;  // leading position per echelon vector
        size_t done = 0;
        for (int pos = e - 1; pos >= 0 && done < basis.size(); --pos) {
            size_t sel = basis.size();
            for (size_t i = done; i < basis.size(); ++i) {
                if (basis[i].coeffs[pos] != 0) {
                    sel = i;
                    break;
                }
            }
            if (sel == basis.size()) continue;
            std::swap(basis[done], basis[sel]);
            i64 inv = mod_inv(basis[done].coeffs[pos], p);
            for (int j = 0; j < e; ++j) basis[done].coeffs[j] = normalize_mod(basis[done].coeffs[j] * inv, p);
            for (size_t i = 0; i < basis.size(); ++i) {
                if (i == done || basis[i].coeffs[pos] == 0) continue;
                i64 f = basis[i].coeffs[pos];
                for (int j = 0; j < e; ++j) {
                    basis[i].coeffs[j] = normalize_mod(basis[i].coeffs[j] - f * basis[done].coeffs[j], p);
                }
            }
            lead.push_back(pos);
            ++done;
        }
        for (size_t i = 0; i < lead.size(); ++i) {
            i64 f = x.coeffs[lead[i]];
            if (f == 0) continue;
            for (int j = 0; j < e; ++j) {
                x.coeffs[j] = normalize_mod(x.coeffs[j] - f * basis[i].coeffs[j], p);
            }
        }
    }

    sol.solvable = true;
    sol.x0 = std::move(x);
    return sol;
}

LinearizedMap build_map(const FieldCtx& ctx, const FqElem& a, int alpha) {
    return LinearizedMap(ctx, a, alpha);
}

CoulterSolution solve_coulter(const LinearizedMap& map, const FqElem& b) {
    const FieldCtx& ctx = map.ctx();
    if (ctx.is_zero(b)) throw ZeroCoefficientError("solve_coulter: b must be nonzero");
    FqElem rhs = ctx.neg(ctx.frobenius(b, map.alpha()));
    return map.solve(rhs);
}

FqElem gamma_for(const FieldCtx& ctx, int alpha, const FqElem& b) {
    i64 d = gcd_i64(alpha, ctx.e());
    if ((ctx.e() / d) % 2 == 0) {
        throw EvenEOverDError("gamma_for: requires e/gcd(alpha,e) odd");
    }
    if (ctx.is_zero(b)) throw ZeroBError("gamma_for: b must be nonzero");
    LinearizedMap unit_map(ctx, ctx.one(), alpha);
    CoulterSolution sol = solve_coulter(unit_map, b);
    if (!sol.solvable || sol.kernel_dim != 0) {
        throw CoulterError("gamma_for: map unexpectedly singular");
    }
    return sol.x0;
}

bool coulter_permutation_criterion(const FieldCtx& ctx, const FqElem& a, int alpha) {
    if (ctx.is_zero(a)) throw ZeroCoefficientError("permutation criterion: a must be nonzero");
    const int e = ctx.e();
    i64 d = gcd_i64(alpha, e);
    if ((e / d) % 2 != 0) return true;
    const i64 m = e / 2;
    i64 pd = checked_pow_i64(ctx.p(), static_cast<int>(d));
    u64 exp = static_cast<u64>((ctx.q() - 1) / (pd + 1));
    FqElem cond = ctx.pow(a, exp);
    FqElem target = ctx.embed_prime((m / d) % 2 == 0 ? 1 : ctx.p() - 1);
    return cond != target;
}

}  // namespace coulter
