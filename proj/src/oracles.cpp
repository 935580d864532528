#include "coulter/oracles.hpp"

#include <cstdlib>

#include "coulter/errors.hpp"

namespace coulter {

i64 enumeration_ceiling() {
    static const i64 ceiling = [] {
        if (const char* env = std::getenv("COULTER_MAX_Q")) {
            i64 v = std::atoll(env);
            if (v > 0) return v;
        }
        return i64(200000);
    }();
    return ceiling;
}

namespace {

void check_ceiling(const FieldCtx& ctx) {
    if (ctx.q() > enumeration_ceiling()) {
        throw EnumerationCeilingError("enumeration over q = " + std::to_string(ctx.q()) +
                                      " exceeds the ceiling " + std::to_string(enumeration_ceiling()) +
                                      " (set COULTER_MAX_Q to raise it)");
    }
}

}  // namespace

EnumTables::EnumTables(const FieldCtx& ctx) : ctx_(&ctx) {
    check_ceiling(ctx);
    const i64 q = ctx.q();
    log_.assign(static_cast<size_t>(q), -1);
    exp_.assign(static_cast<size_t>(q - 1), 0);
    trace_.assign(static_cast<size_t>(q), 0);

    FqElem cur = ctx.one();
    for (i64 k = 0; k < q - 1; ++k) {
        i64 enc = ctx.encoding(cur);
        exp_[static_cast<size_t>(k)] = enc;
        log_[static_cast<size_t>(enc)] = k;
        cur = ctx.mul(cur, ctx.theta());
    }
    if (cur != ctx.one()) throw CoulterError("EnumTables: theta order mismatch");

    for (i64 enc = 0; enc < q; ++enc) {
        trace_[static_cast<size_t>(enc)] = ctx.trace(ctx.from_encoding(enc));
    }
}

std::vector<i64> EnumTables::power_map_table(int alpha) const {
    const i64 q = ctx_->q();
    // x = theta^k maps to theta^{k (p^alpha + 1)}; exponent arithmetic only.
    i64 step = 1;
    for (int i = 0; i < alpha; ++i) step = (step * (ctx_->p() % (q - 1))) % (q - 1);
    // step == p^alpha mod (q-1); the exponent multiplier is step + 1.
    std::vector<i64> table(static_cast<size_t>(q), 0);
    for (i64 k = 0; k < q - 1; ++k) {
        i64 ek = (k % (q - 1)) * ((step + 1) % (q - 1)) % (q - 1);
        table[static_cast<size_t>(exp_[static_cast<size_t>(k)])] = exp_[static_cast<size_t>(ek)];
    }
    return table;
}

std::vector<i64> EnumTables::trace_power_table(int alpha) const {
    std::vector<i64> pm = power_map_table(alpha);
    std::vector<i64> tp(pm.size());
    for (size_t x = 0; x < pm.size(); ++x) tp[x] = trace_[static_cast<size_t>(pm[x])];
    return tp;
}

std::vector<i64> trace_power_histogram(const EnumTables& tab, int alpha) {
    const i64 p = tab.ctx().p();
    std::vector<i64> tp = tab.trace_power_table(alpha);
    std::vector<i64> h(static_cast<size_t>(p), 0);
    for (i64 t : tp) ++h[static_cast<size_t>(t)];
    return h;
}

std::vector<std::vector<i64>> joint_histogram(const EnumTables& tab, int alpha, const FqElem& b) {
    const FieldCtx& ctx = tab.ctx();
    if (ctx.is_zero(b)) throw ZeroBError("joint_histogram: b must be nonzero");
    const i64 p = ctx.p();
    const i64 q = ctx.q();
    std::vector<i64> tp = tab.trace_power_table(alpha);
    std::vector<std::vector<i64>> H(static_cast<size_t>(p), std::vector<i64>(static_cast<size_t>(p), 0));
    const i64 logb = tab.log_of(ctx.encoding(b));
    for (i64 k = 0; k < q - 1; ++k) {
        i64 x = tab.exp_of(k);
        i64 u = tab.trace_of(tab.exp_of((logb + k) % (q - 1)));
        ++H[static_cast<size_t>(tp[static_cast<size_t>(x)])][static_cast<size_t>(u)];
    }
    ++H[0][0];  // x = 0
    return H;
}

CycInt oracle_weil(const EnumTables& tab, int alpha, const FqElem& a, const FqElem& b) {
    return oracle_weil_with_table(tab, tab.power_map_table(alpha), a, b);
}

CycInt oracle_weil_with_table(const EnumTables& tab, const std::vector<i64>& pm,
                              const FqElem& a, const FqElem& b) {
    const FieldCtx& ctx = tab.ctx();
    if (ctx.is_zero(a)) throw ZeroCoefficientError("oracle_weil: a must be nonzero");
    const i64 p = ctx.p();
    const i64 q = ctx.q();
    const i64 loga = tab.log_of(ctx.encoding(a));
    const bool bz = ctx.is_zero(b);
    const i64 logb = bz ? 0 : tab.log_of(ctx.encoding(b));

    std::vector<i64> buckets(static_cast<size_t>(p), 0);
    ++buckets[0];  // x = 0 contributes zeta^0
    for (i64 k = 0; k < q - 1; ++k) {
        i64 x = tab.exp_of(k);
        i64 ax = tab.exp_of((loga + tab.log_of(pm[static_cast<size_t>(x)])) % (q - 1));
        i64 phase = tab.trace_of(ax);
        if (!bz) phase += tab.trace_of(tab.exp_of((logb + k) % (q - 1)));
        ++buckets[static_cast<size_t>(phase % p)];
    }
    return CycInt::from_zeta_buckets(p, buckets);
}

CycInt oracle_A_from_histogram(i64 p, i64 a_fp, const std::vector<i64>& h) {
    a_fp = normalize_mod(a_fp, p);
    std::vector<i64> buckets(static_cast<size_t>(p), 0);
    for (i64 y = 1; y < p; ++y) {
        for (i64 t = 0; t < p; ++t) {
            i64 expnt = normalize_mod(y * t - a_fp * y, p);
            buckets[static_cast<size_t>(expnt)] += h[static_cast<size_t>(t)];
        }
    }
    return CycInt::from_zeta_buckets(p, buckets);
}

CycInt oracle_A(const EnumTables& tab, int alpha, i64 a_fp) {
    return oracle_A_from_histogram(tab.ctx().p(), a_fp, trace_power_histogram(tab, alpha));
}

std::vector<std::vector<CycInt>> oracle_B_all_from_histogram(i64 p, const std::vector<std::vector<i64>>& H) {
    // V[y][z][w] = sum of H[s][u] over cells with ys + zu = w; then
    // B(a,c) shifts every (y,z) bucket vector by -ay - cz. O(p^4 + p^5)
    // integer additions for the whole p x p output block.
    std::vector<std::vector<std::vector<i64>>> V(
        static_cast<size_t>(p), std::vector<std::vector<i64>>(static_cast<size_t>(p), std::vector<i64>(static_cast<size_t>(p), 0)));
    for (i64 y = 1; y < p; ++y) {
        for (i64 z = 1; z < p; ++z) {
            auto& vyz = V[static_cast<size_t>(y)][static_cast<size_t>(z)];
            for (i64 s = 0; s < p; ++s) {
                const i64 ys = y * s;
                for (i64 u = 0; u < p; ++u) {
                    i64 c = H[static_cast<size_t>(s)][static_cast<size_t>(u)];
                    if (c != 0) vyz[static_cast<size_t>((ys + z * u) % p)] += c;
                }
            }
        }
    }
    std::vector<std::vector<CycInt>> out(static_cast<size_t>(p), std::vector<CycInt>(static_cast<size_t>(p), CycInt(p)));
    std::vector<i64> buckets(static_cast<size_t>(p));
    for (i64 a = 0; a < p; ++a) {
        for (i64 c = 0; c < p; ++c) {
            std::fill(buckets.begin(), buckets.end(), 0);
            for (i64 y = 1; y < p; ++y) {
                for (i64 z = 1; z < p; ++z) {
                    const auto& vyz = V[static_cast<size_t>(y)][static_cast<size_t>(z)];
                    const i64 shift = normalize_mod(-a * y - c * z, p);
                    for (i64 w = 0; w < p; ++w) {
                        buckets[static_cast<size_t>((w + shift) % p)] += vyz[static_cast<size_t>(w)];
                    }
                }
            }
            out[static_cast<size_t>(a)][static_cast<size_t>(c)] = CycInt::from_zeta_buckets(p, buckets);
        }
    }
    return out;
}

CycInt oracle_B(const EnumTables& tab, int alpha, i64 a_fp, i64 c_fp, const FqElem& b) {
    const i64 p = tab.ctx().p();
    a_fp = normalize_mod(a_fp, p);
    c_fp = normalize_mod(c_fp, p);
    auto H = joint_histogram(tab, alpha, b);
    std::vector<i64> buckets(static_cast<size_t>(p), 0);
    for (i64 y = 1; y < p; ++y) {
        for (i64 z = 1; z < p; ++z) {
            const i64 shift = normalize_mod(-a_fp * y - c_fp * z, p);
            for (i64 s = 0; s < p; ++s) {
                for (i64 u = 0; u < p; ++u) {
                    i64 cnt = H[static_cast<size_t>(s)][static_cast<size_t>(u)];
                    if (cnt != 0) buckets[static_cast<size_t>((y * s + z * u + shift) % p)] += cnt;
                }
            }
        }
    }
    return CycInt::from_zeta_buckets(p, buckets);
}

CycInt oracle_gauss_q(const EnumTables& tab) {
    const FieldCtx& ctx = tab.ctx();
    const i64 p = ctx.p();
    const i64 q = ctx.q();
    std::vector<i64> buckets(static_cast<size_t>(p), 0);
    for (i64 k = 0; k < q - 1; ++k) {
        i64 x = tab.exp_of(k);
        buckets[static_cast<size_t>(tab.trace_of(x))] += (k & 1) ? -1 : 1;
    }
    return CycInt::from_zeta_buckets(p, buckets);
}

CycInt oracle_quadratic_sum(const EnumTables& tab, const FqElem& a2, const FqElem& a1, const FqElem& a0) {
    const FieldCtx& ctx = tab.ctx();
    if (ctx.is_zero(a2)) throw ZeroCoefficientError("oracle_quadratic_sum: a2 must be nonzero");
    const i64 p = ctx.p();
    const i64 q = ctx.q();
    std::vector<i64> buckets(static_cast<size_t>(p), 0);
    for (i64 enc = 0; enc < q; ++enc) {
        FqElem x = ctx.from_encoding(enc);
        FqElem fx = ctx.add(ctx.mul(a2, ctx.mul(x, x)), ctx.add(ctx.mul(a1, x), a0));
        ++buckets[static_cast<size_t>(ctx.trace(fx))];
    }
    return CycInt::from_zeta_buckets(p, buckets);
}

std::vector<FqElem> enumerate_D(const EnumTables& tab, int alpha, i64 a_fp) {
    const FieldCtx& ctx = tab.ctx();
    a_fp = normalize_mod(a_fp, ctx.p());
    std::vector<i64> tp = tab.trace_power_table(alpha);
    std::vector<FqElem> out;
    for (i64 enc = 0; enc < ctx.q(); ++enc) {
        if (tp[static_cast<size_t>(enc)] == a_fp) out.push_back(ctx.from_encoding(enc));
    }
    return out;
}

i64 count_n(const EnumTables& tab, int alpha, i64 a_fp) {
    // For a = 0 the defining count is |D union {0}|, which equals |D|
    // because Tr(0) = 0 puts x = 0 in D already.
    const i64 p = tab.ctx().p();
    std::vector<i64> h = trace_power_histogram(tab, alpha);
    return h[static_cast<size_t>(normalize_mod(a_fp, p))];
}

std::vector<FqElem> enumerate_M(const EnumTables& tab, int alpha, i64 a_fp, i64 c_fp, const FqElem& b) {
    const FieldCtx& ctx = tab.ctx();
    if (ctx.is_zero(b)) throw ZeroBError("enumerate_M: b must be nonzero");
    const i64 p = ctx.p();
    const i64 q = ctx.q();
    a_fp = normalize_mod(a_fp, p);
    c_fp = normalize_mod(c_fp, p);
    std::vector<i64> tp = tab.trace_power_table(alpha);
    const i64 logb = tab.log_of(ctx.encoding(b));
    std::vector<FqElem> out;
    if (tp[0] == a_fp && c_fp == 0) out.push_back(ctx.from_encoding(0));
    for (i64 enc = 1; enc < q; ++enc) {
        if (tp[static_cast<size_t>(enc)] != a_fp) continue;
        i64 u = tab.trace_of(tab.exp_of((logb + tab.log_of(enc)) % (q - 1)));
        if (u == c_fp) out.push_back(ctx.from_encoding(enc));
    }
    return out;
}

i64 count_N(const EnumTables& tab, int alpha, i64 a_fp, i64 c_fp, const FqElem& b) {
    const i64 p = tab.ctx().p();
    auto H = joint_histogram(tab, alpha, b);
    return H[static_cast<size_t>(normalize_mod(a_fp, p))][static_cast<size_t>(normalize_mod(c_fp, p))];
}

OracleValue evaluate_oracle(const EnumTables& tab, const SumSpec& spec) {
    spec.validate();
    const FieldCtx& ctx = tab.ctx();
    if (spec.p != ctx.p() || spec.e != ctx.e()) throw CtxMismatchError("evaluate_oracle: spec/context mismatch");
    auto wrap = [&](CycInt v) { return OracleValue{v, v.as_integer()}; };
    auto wrap_count = [&](i64 n) { return OracleValue{CycInt::integer(ctx.p(), n), n}; };
    switch (spec.kind) {
        case SumKind::S:
            return wrap(oracle_weil(tab, spec.alpha, ctx.from_encoding(*spec.a_enc), ctx.from_encoding(*spec.b_enc)));
        case SumKind::S0:
            return wrap(oracle_weil(tab, spec.alpha, ctx.from_encoding(*spec.a_enc), ctx.zero()));
        case SumKind::A:
            return wrap(oracle_A(tab, spec.alpha, *spec.a_fp));
        case SumKind::B:
            return wrap(oracle_B(tab, spec.alpha, *spec.a_fp, *spec.c_fp, ctx.from_encoding(*spec.b_enc)));
        case SumKind::nCount:
        case SumKind::Dset:
            return wrap_count(count_n(tab, spec.alpha, *spec.a_fp));
        case SumKind::NCount:
        case SumKind::Mset:
            return wrap_count(count_N(tab, spec.alpha, *spec.a_fp, *spec.c_fp, ctx.from_encoding(*spec.b_enc)));
        case SumKind::GaussQ:
            return wrap(oracle_gauss_q(tab));
        case SumKind::GaussP:
            return wrap(gauss_sum_prime(ctx.p()).value);
    }
    throw CoulterError("evaluate_oracle: unhandled kind");
}

}  // namespace coulter
