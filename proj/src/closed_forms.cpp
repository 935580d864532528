#include "coulter/closed_forms.hpp"

#include <atomic>
#include <sstream>

#include "coulter/errors.hpp"

namespace coulter {

namespace {

std::atomic<bool> g_mutation{false};

// i^{e+1} for odd e: a rational sign, (-1)^{(e+1)/2}.
i64 i_pow_e_plus_1(int e) { return ((e + 1) / 2) % 2 == 0 ? 1 : -1; }

// (-1)^m
i64 neg_one_pow(i64 m) { return m % 2 == 0 ? 1 : -1; }

void require_odd_e_over_d(int e, int alpha, const char* who) {
    if (e < 1 || alpha < 1) throw CoulterError(std::string(who) + ": e and alpha must be >= 1");
    i64 d = gcd_i64(alpha, e);
    if ((e / d) % 2 == 0) {
        throw EvenEOverDError(std::string(who) + ": closed forms require e/gcd(alpha,e) odd (e=" +
                              std::to_string(e) + ", alpha=" + std::to_string(alpha) + ")");
    }
}

// t-subcase of the B/N dispatch: 0 for t = 0; for a,c both nonzero,
// 1 when t = c^2/(4a) and 2 otherwise; for the other sign patterns,
// 1 for any t != 0.
int t_case(i64 p, i64 a, i64 c, i64 t) {
    if (t == 0) return 0;
    if (a != 0 && c != 0) {
        i64 crit = normalize_mod(c * c % p * mod_inv(4 * a % p, p), p);
        return t == crit ? 1 : 2;
    }
    return 1;
}

std::string b_branch_id(i64 a, i64 c, bool e_even, int pm, int tc) {
    std::ostringstream os;
    os << "B:a" << (a == 0 ? 0 : 1) << "c" << (c == 0 ? 0 : 1) << ":" << (e_even ? "eeven" : "eodd")
       << ":p" << pm << ":";
    if (a != 0 && c != 0) {
        os << (tc == 0 ? "t0" : tc == 1 ? "disc0" : "gen");
    } else {
        os << (tc == 0 ? "t0" : "tnz");
    }
    return os.str();
}

}  // namespace

void set_selftest_mutation(bool enabled) { g_mutation.store(enabled); }
bool selftest_mutation_enabled() { return g_mutation.load(); }

CycInt SymbolicValue::expand() const {
    CycInt r = CycInt::integer(p, rational);
    if (rational == 0) return r;
    if (gauss_power == 1) r = r * gauss_sum_prime(p).value;
    if (zeta_exp != 0) r = r * CycInt::zeta_pow(p, zeta_exp);
    return r;
}

std::string SymbolicValue::to_string() const {
    std::ostringstream os;
    os << rational;
    if (rational != 0 && gauss_power == 1) os << "*G";
    if (rational != 0 && zeta_exp != 0) os << "*zeta^" << zeta_exp;
    return os.str();
}

SymbolicValue kappa(i64 p, int e) {
    const int pm = static_cast<int>(p % 4);
    if (e % 2 == 0) {
        const i64 m = e / 2;
        i64 pm_pow = checked_pow_i64(p, static_cast<int>(m));
        i64 rat = (pm == 1) ? -pm_pow : -neg_one_pow(m) * pm_pow;
        return SymbolicValue{p, rat, 0, 0};
    }
    // e odd. kappa = sqrt(q) for p = 1 mod 4 and -i^e sqrt(q) for
    // p = 3 mod 4, with sqrt(q) = p^{(e-1)/2} sqrt(p). The prime Gauss sum
    // satisfies G = sqrt(p) (p = 1 mod 4) or G = i sqrt(p) (p = 3 mod 4),
    // the branch of sqrt being the principal one in both cases. Hence:
    //   p = 1 mod 4: kappa = p^{(e-1)/2} G.
    //   p = 3 mod 4: sqrt(p) = -i G, so
    //                kappa = -i^e p^{(e-1)/2} (-i G) = i^{e+1} p^{(e-1)/2} G,
    //                and i^{e+1} = (-1)^{(e+1)/2} is rational since e is odd.
    i64 base = checked_pow_i64(p, (e - 1) / 2);
    i64 rat = (pm == 1) ? base : i_pow_e_plus_1(e) * base;
    return SymbolicValue{p, rat, 1, 0};
}

namespace {

// The bijective case with b != 0, or the b = 0 extension via x0 = 0 when
// e/d is odd (where it provably agrees with the dedicated S(a,0) form;
// the test suite compares the two paths element by element).
ClosedResult closed_S_perm_impl(const LinearizedMap& map, const FqElem& b) {
    const FieldCtx& ctx = map.ctx();
    const i64 p = ctx.p();
    const int e = ctx.e();
    const int pm = static_cast<int>(p % 4);
    const int alpha = map.alpha();
    const i64 d = gcd_i64(alpha, e);
    const bool odd = (e / d) % 2 != 0;
    const FqElem& a = map.coeff();

    FqElem x0 = ctx.zero();
    if (!ctx.is_zero(b)) {
        CoulterSolution sol = solve_coulter(map, b);
        if (!sol.solvable) throw CoulterError("closed_S: bijection reported unsolvable system");
        x0 = sol.x0;
    }
    i64 tr = ctx.trace(ctx.mul(a, ctx.power_map(x0, alpha)));
    i64 zexp = normalize_mod(-tr, p);
    if (odd) {
        SymbolicValue k = kappa(p, e);
        i64 eta_neg_a = ctx.quad_char(ctx.neg(a));
        SymbolicValue v{p, k.rational * eta_neg_a, k.gauss_power, zexp};
        return ClosedResult{v, BranchTag{std::string("Sperm:odd:p") + std::to_string(pm), e % 2 == 0, pm}, std::nullopt};
    }
    // Sign note: with e/d even the bijective case evaluates to
    // (-1)^{m/d} p^m zeta^{-Tr(a x0^{p^alpha+1})} (no leading minus; the
    // minus belongs to the singular case below). This is forced by the
    // b = 0 specialization, where x0 = 0 must reproduce the dedicated
    // S(a,0) values +/- p^m, and is confirmed by the exhaustive oracle
    // sweeps.
    const i64 m = e / 2;
    i64 rat = neg_one_pow(m / d) * checked_pow_i64(p, static_cast<int>(m));
    return ClosedResult{SymbolicValue{p, rat, 0, zexp}, BranchTag{"Sperm:even", true, pm}, std::nullopt};
}

ClosedResult closed_S_nonperm_impl(const LinearizedMap& map, const FqElem& b) {
    const FieldCtx& ctx = map.ctx();
    const i64 p = ctx.p();
    const int e = ctx.e();
    const int pm = static_cast<int>(p % 4);
    const i64 d = gcd_i64(map.alpha(), e);
    if ((e / d) % 2 != 0 || e % 2 != 0) throw CoulterError("closed_S: singular map with e/d odd");
    const i64 m = e / 2;
    CoulterSolution sol = solve_coulter(map, b);
    if (!sol.solvable) {
        return ClosedResult{SymbolicValue{p, 0, 0, 0}, BranchTag{"Snonperm:zero", true, pm}, std::nullopt};
    }
    i64 tr = ctx.trace(ctx.mul(map.coeff(), ctx.power_map(sol.x0, map.alpha())));
    i64 zexp = normalize_mod(-tr, p);
    i64 rat = -neg_one_pow(m / d) * checked_pow_i64(p, static_cast<int>(m + d));
    return ClosedResult{SymbolicValue{p, rat, 0, zexp}, BranchTag{"Snonperm:solvable", true, pm}, std::nullopt};
}

}  // namespace

ClosedResult closed_S_perm(const FieldCtx& ctx, int alpha, const FqElem& a, const FqElem& b) {
    LinearizedMap map(ctx, a, alpha);
    if (!map.is_permutation()) throw NotPermutationError("closed_S_perm: map is not a permutation");
    return closed_S_perm_impl(map, b);
}

ClosedResult closed_S_nonperm(const FieldCtx& ctx, int alpha, const FqElem& a, const FqElem& b) {
    LinearizedMap map(ctx, a, alpha);
    if (map.is_permutation()) throw IsPermutationError("closed_S_nonperm: map is a permutation");
    if (ctx.is_zero(b)) throw ZeroBError("closed_S_nonperm: b must be nonzero");
    return closed_S_nonperm_impl(map, b);
}

ClosedResult closed_S_a0(const FieldCtx& ctx, int alpha, const FqElem& a) {
    if (ctx.is_zero(a)) throw ZeroCoefficientError("closed_S_a0: a must be nonzero");
    const i64 p = ctx.p();
    const int e = ctx.e();
    const int pm = static_cast<int>(p % 4);
    const i64 d = gcd_i64(alpha, e);
    const int qc = ctx.quad_char(a);

    if ((e / d) % 2 != 0) {
        SymbolicValue v{p, 0, 0, 0};
        if (e % 2 == 0) {
            // (-1)^{e-1} = -1; i^e = (-1)^{e/2} when also p = 3 mod 4.
            i64 rat = -checked_pow_i64(p, e / 2) * qc;
            if (pm == 3) rat *= neg_one_pow(e / 2);
            v = SymbolicValue{p, rat, 0, 0};
        } else {
            i64 base = checked_pow_i64(p, (e - 1) / 2) * qc;
            i64 rat = (pm == 1) ? base : -i_pow_e_plus_1(e) * base;
            v = SymbolicValue{p, rat, 1, 0};
        }
        return ClosedResult{v, BranchTag{std::string("S0:odd:p") + std::to_string(pm), e % 2 == 0, pm}, std::nullopt};
    }

    const i64 m = e / 2;
    const i64 md = m / d;
    i64 pd = checked_pow_i64(p, static_cast<int>(d));
    FqElem cond = ctx.pow(a, static_cast<u64>((ctx.q() - 1) / (pd + 1)));
    bool eq = cond == ctx.embed_prime(md % 2 == 0 ? 1 : p - 1);
    i64 rat;
    std::string id;
    if (!eq) {
        rat = (md % 2 == 0) ? checked_pow_i64(p, static_cast<int>(m)) : -checked_pow_i64(p, static_cast<int>(m));
        id = std::string("S0:even:ne:md") + (md % 2 == 0 ? "even" : "odd");
    } else {
        rat = (md % 2 == 0) ? -checked_pow_i64(p, static_cast<int>(m + d)) : checked_pow_i64(p, static_cast<int>(m + d));
        id = std::string("S0:even:eq:md") + (md % 2 == 0 ? "even" : "odd");
    }
    return ClosedResult{SymbolicValue{p, rat, 0, 0}, BranchTag{id, true, pm}, std::nullopt};
}

ClosedResult closed_S_from_map(const LinearizedMap& map, const FqElem& b) {
    const FieldCtx& ctx = map.ctx();
    if (ctx.is_zero(b)) return closed_S_a0(ctx, map.alpha(), map.coeff());
    if (map.is_permutation()) return closed_S_perm_impl(map, b);
    return closed_S_nonperm_impl(map, b);
}

ClosedResult closed_S(const FieldCtx& ctx, int alpha, const FqElem& a, const FqElem& b) {
    LinearizedMap map(ctx, a, alpha);
    return closed_S_from_map(map, b);
}

ClosedResult closed_A(i64 p, int e, int alpha, i64 a_fp) {
    require_odd_e_over_d(e, alpha, "closed_A");
    const int pm = static_cast<int>(p % 4);
    const i64 a = normalize_mod(a_fp, p);

    i64 v;
    if (e % 2 == 0) {
        const i64 m = e / 2;
        const i64 pmw = checked_pow_i64(p, static_cast<int>(m));
        const i64 f = (pm == 1) ? 1 : neg_one_pow(m);
        v = (a == 0) ? -f * (p - 1) * pmw : f * pmw;
    } else {
        if (a == 0) {
            v = 0;
        } else {
            const i64 base = checked_pow_i64(p, (e + 1) / 2);
            const i64 eta = legendre(a, p);
            v = (pm == 1) ? eta * base : -i_pow_e_plus_1(e) * eta * base;
        }
    }
    std::string id = std::string("A:a") + (a == 0 ? "0" : "1") + ":" + (e % 2 == 0 ? "eeven" : "eodd") +
                     ":p" + std::to_string(pm);
    return ClosedResult{SymbolicValue::integer(p, v), BranchTag{id, e % 2 == 0, pm}, std::nullopt};
}

ClosedResult closed_B_from_trace(i64 p, int e, int alpha, i64 a_fp, i64 c_fp, i64 t) {
    require_odd_e_over_d(e, alpha, "closed_B");
    const int pm = static_cast<int>(p % 4);
    const i64 a = normalize_mod(a_fp, p);
    const i64 c = normalize_mod(c_fp, p);
    t = normalize_mod(t, p);
    const bool e_even = e % 2 == 0;
    const bool p1 = pm == 1;
    const int tc = t_case(p, a, c, t);

    // Runtime totality proof: exactly one registered branch must match.
    {
        int matches = 0;
        for (int ba = 0; ba < 2; ++ba)
            for (int bc = 0; bc < 2; ++bc)
                for (int be = 0; be < 2; ++be)
                    for (int bp = 0; bp < 2; ++bp) {
                        int tmax = (ba == 1 && bc == 1) ? 3 : 2;
                        for (int bt = 0; bt < tmax; ++bt) {
                            bool hit = (ba == (a != 0 ? 1 : 0)) && (bc == (c != 0 ? 1 : 0)) &&
                                       (be == (e_even ? 1 : 0)) && (bp == (p1 ? 0 : 1)) && (bt == tc);
                            matches += hit ? 1 : 0;
                        }
                    }
        if (matches != 1) throw CoulterError("closed_B: branch dispatch not total");
    }

    i64 v = 0;
    if (e_even) {
        const i64 m = e / 2;
        const i64 Pm = checked_pow_i64(p, static_cast<int>(m));
        const i64 F = p1 ? 1 : neg_one_pow(m);
        if (a == 0 && c == 0) {
            v = (tc == 0) ? -F * Pm * (p - 1) * (p - 1) : F * Pm * (p - 1);
        } else if (a == 0) {
            v = (tc == 0) ? F * Pm * (p - 1) : -F * Pm;
        } else if (c == 0) {
            if (tc == 0) {
                v = F * Pm * (p - 1);
            } else {
                const i64 eta_at = legendre(a * t % p, p);
                v = p1 ? -(1 + p * eta_at) * Pm : -F * (1 - p * eta_at) * Pm;
            }
        } else {
            if (tc == 0 || tc == 1) {
                v = -F * Pm;
            } else {
                const i64 u = normalize_mod(c * c - 4 * a * t, p);
                v = -F * (1 + p * legendre(u, p)) * Pm;
            }
        }
    } else {
        const i64 P = checked_pow_i64(p, (e + 1) / 2);
        const i64 si = i_pow_e_plus_1(e);
        const i64 eta_t = legendre(t, p);
        const i64 eta_a = legendre(a, p);
        if (a == 0 && c == 0) {
            if (tc == 0) {
                v = 0;
            } else {
                v = (p1 ? 1 : -si) * eta_t * P * (p - 1);
                // Mutation hook (self-test): a single documented sign flip.
                if (g_mutation.load()) v = -v;
            }
        } else if (a == 0) {
            v = (tc == 0) ? 0 : (p1 ? -1 : si) * eta_t * P;
        } else if (c == 0) {
            if (tc == 0) {
                v = (p1 ? 1 : -si) * eta_a * (p - 1) * P;
            } else {
                v = p1 ? -(eta_a + eta_t) * P : si * (eta_a + eta_t) * P;
            }
        } else {
            if (tc == 0) {
                v = (p1 ? -1 : si) * eta_a * P;
            } else if (tc == 1) {
                v = p1 ? (eta_t * (p - 1) - eta_a) * P : -si * (eta_t * (p - 1) - eta_a) * P;
            } else {
                v = p1 ? -(eta_t + eta_a) * P : si * (eta_t + eta_a) * P;
            }
        }
    }

    BranchTag tag{b_branch_id(a, c, e_even, pm, tc), e_even, pm};
    ClosedResult res{SymbolicValue::integer(p, v), tag, t};
    return res;
}

ClosedResult closed_B(const FieldCtx& ctx, int alpha, i64 a_fp, i64 c_fp, const FqElem& b) {
    if (ctx.is_zero(b)) throw ZeroBError("closed_B: b must be nonzero");
    FqElem gamma = gamma_for(ctx, alpha, b);
    i64 t = ctx.trace(ctx.power_map(gamma, alpha));
    return closed_B_from_trace(ctx.p(), ctx.e(), alpha, a_fp, c_fp, t);
}

i64 closed_n(i64 p, int e, int alpha, i64 a_fp) {
    require_odd_e_over_d(e, alpha, "closed_n");
    const int pm = static_cast<int>(p % 4);
    const i64 a = normalize_mod(a_fp, p);
    const i64 lead = checked_pow_i64(p, e - 1);
    if (e % 2 == 0) {
        const i64 m = e / 2;
        const i64 pm1 = checked_pow_i64(p, static_cast<int>(m - 1));
        const i64 F = (pm == 1) ? 1 : neg_one_pow(m);
        return (a == 0) ? lead - F * (p - 1) * pm1 : lead + F * pm1;
    }
    if (a == 0) return lead;
    const i64 half = checked_pow_i64(p, (e - 1) / 2);
    const i64 eta = legendre(a, p);
    return (pm == 1) ? lead + eta * half : lead - i_pow_e_plus_1(e) * eta * half;
}

BranchTag closed_n_branch(i64 p, int e, int alpha, i64 a_fp) {
    require_odd_e_over_d(e, alpha, "closed_n");
    const int pm = static_cast<int>(p % 4);
    const i64 a = normalize_mod(a_fp, p);
    std::string id = std::string("n:a") + (a == 0 ? "0" : "1") + ":" + (e % 2 == 0 ? "eeven" : "eodd") +
                     ":p" + std::to_string(pm);
    return BranchTag{id, e % 2 == 0, pm};
}

i64 closed_N_from_trace(i64 p, int e, int alpha, i64 a_fp, i64 c_fp, i64 t) {
    ClosedResult A = closed_A(p, e, alpha, a_fp);
    ClosedResult B = closed_B_from_trace(p, e, alpha, a_fp, c_fp, t);
    i64 total = checked_pow_i64(p, e) + A.value.rational + B.value.rational;
    if (total % (p * p) != 0) {
        throw CoulterError("closed_N: composition is not divisible by p^2");
    }
    return total / (p * p);
}

i64 closed_N(const FieldCtx& ctx, int alpha, i64 a_fp, i64 c_fp, const FqElem& b) {
    if (ctx.is_zero(b)) throw ZeroBError("closed_N: b must be nonzero");
    FqElem gamma = gamma_for(ctx, alpha, b);
    i64 t = ctx.trace(ctx.power_map(gamma, alpha));
    return closed_N_from_trace(ctx.p(), ctx.e(), alpha, a_fp, c_fp, t);
}

std::optional<i64> closed_N_literal(i64 p, int e, int alpha, i64 a_fp, i64 c_fp, i64 t) {
    require_odd_e_over_d(e, alpha, "closed_N_literal");
    const bool e_even = e % 2 == 0;
    if (!e_even && e < 3) return std::nullopt;  // p^{(e-3)/2} not integral
    const int pm = static_cast<int>(p % 4);
    const bool p1 = pm == 1;
    const i64 a = normalize_mod(a_fp, p);
    const i64 c = normalize_mod(c_fp, p);
    t = normalize_mod(t, p);
    const int tc = t_case(p, a, c, t);
    const i64 lead = checked_pow_i64(p, e - 2);

    if (e_even) {
        const i64 m = e / 2;
        const i64 pm1 = checked_pow_i64(p, static_cast<int>(m - 1));
        const i64 F = p1 ? 1 : neg_one_pow(m);
        if (a == 0 && c == 0) return (tc == 0) ? lead - F * (p - 1) * pm1 : lead;
        if (a == 0) return (tc == 0) ? lead : lead - F * pm1;
        if (c == 0) {
            if (tc == 0) return lead + F * pm1;
            const i64 eta_at = legendre(a * t % p, p);
            return p1 ? lead - eta_at * pm1 : lead + F * eta_at * pm1;
        }
        if (tc == 0 || tc == 1) return lead;
        const i64 u = normalize_mod(c * c - 4 * a * t, p);
        return lead - F * legendre(u, p) * pm1;
    }

    const i64 low = checked_pow_i64(p, (e - 3) / 2);
    const i64 half = checked_pow_i64(p, (e - 1) / 2);
    const i64 si = i_pow_e_plus_1(e);
    const i64 eta_t = legendre(t, p);
    const i64 eta_a = legendre(a, p);
    if (a == 0 && c == 0) {
        return (tc == 0) ? lead : lead + (p1 ? 1 : -si) * eta_t * (p - 1) * low;
    }
    if (a == 0) {
        return (tc == 0) ? lead : lead + (p1 ? -1 : si) * eta_t * low;
    }
    if (c == 0) {
        if (tc == 0) return lead + (p1 ? 1 : -si) * eta_a * half;
        return lead + (p1 ? -1 : si) * eta_t * low;
    }
    if (tc == 0) return lead;
    if (tc == 1) return lead + (p1 ? 1 : -si) * eta_t * (p - 1) * low;
    return lead + (p1 ? -1 : si) * eta_t * low;
}

SymbolicValue closed_gauss_q(i64 p, int e) {
    // Lifting the prime-field Gauss sum through the field norm gives
    // G_q = (-1)^{e-1} G^e with G^2 = legendre(-1|p) p, so the even part
    // collapses to a rational power and at most one factor of G survives.
    i64 base = legendre(p - 1, p) * p;
    i64 rat = (e % 2 == 0) ? -1 : 1;
    for (int i = 0; i < e / 2; ++i) rat *= base;
    return SymbolicValue{p, rat, e % 2, 0};
}

ClosedResult evaluate_closed(const FieldCtx& ctx, const SumSpec& spec) {
    spec.validate();
    if (spec.p != ctx.p() || spec.e != ctx.e()) throw CtxMismatchError("evaluate_closed: spec/context mismatch");
    const i64 p = ctx.p();
    switch (spec.kind) {
        case SumKind::S:
            return closed_S(ctx, spec.alpha, ctx.from_encoding(*spec.a_enc), ctx.from_encoding(*spec.b_enc));
        case SumKind::S0:
            return closed_S_a0(ctx, spec.alpha, ctx.from_encoding(*spec.a_enc));
        case SumKind::A:
            return closed_A(p, ctx.e(), spec.alpha, *spec.a_fp);
        case SumKind::B:
            return closed_B(ctx, spec.alpha, *spec.a_fp, *spec.c_fp, ctx.from_encoding(*spec.b_enc));
        case SumKind::nCount:
        case SumKind::Dset: {
            i64 n = closed_n(p, ctx.e(), spec.alpha, *spec.a_fp);
            return ClosedResult{SymbolicValue::integer(p, n), closed_n_branch(p, ctx.e(), spec.alpha, *spec.a_fp),
                                std::nullopt};
        }
        case SumKind::NCount:
        case SumKind::Mset: {
            FqElem b = ctx.from_encoding(*spec.b_enc);
            FqElem gamma = gamma_for(ctx, spec.alpha, b);
            i64 t = ctx.trace(ctx.power_map(gamma, spec.alpha));
            ClosedResult rb = closed_B_from_trace(p, ctx.e(), spec.alpha, *spec.a_fp, *spec.c_fp, t);
            i64 n = closed_N_from_trace(p, ctx.e(), spec.alpha, *spec.a_fp, *spec.c_fp, t);
            return ClosedResult{SymbolicValue::integer(p, n), rb.branch, t};
        }
        case SumKind::GaussQ:
            return ClosedResult{closed_gauss_q(p, ctx.e()), BranchTag{"", ctx.e() % 2 == 0, static_cast<int>(p % 4)},
                                std::nullopt};
        case SumKind::GaussP:
            return ClosedResult{SymbolicValue{p, 1, 1, 0}, BranchTag{"", false, static_cast<int>(p % 4)}, std::nullopt};
    }
    throw CoulterError("evaluate_closed: unhandled kind");
}

const std::vector<std::string>& registered_branch_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const char* fam : {"A", "n"}) {
            for (const char* az : {"a0", "a1"})
                for (const char* ep : {"eeven", "eodd"})
                    for (const char* pmod : {"p1", "p3"})
                        v.push_back(std::string(fam) + ":" + az + ":" + ep + ":" + pmod);
        }
        for (int ba = 0; ba < 2; ++ba)
            for (int bc = 0; bc < 2; ++bc)
                for (const char* ep : {"eeven", "eodd"})
                    for (const char* pmod : {"p1", "p3"}) {
                        std::string stem = "B:a" + std::to_string(ba) + "c" + std::to_string(bc) + ":" + ep + ":" + pmod + ":";
                        if (ba == 1 && bc == 1) {
                            v.push_back(stem + "t0");
                            v.push_back(stem + "disc0");
                            v.push_back(stem + "gen");
                        } else {
                            v.push_back(stem + "t0");
                            v.push_back(stem + "tnz");
                        }
                    }
        v.push_back("Sperm:odd:p1");
        v.push_back("Sperm:odd:p3");
        v.push_back("Sperm:even");
        v.push_back("Snonperm:zero");
        v.push_back("Snonperm:solvable");
        v.push_back("S0:odd:p1");
        v.push_back("S0:odd:p3");
        v.push_back("S0:even:ne:mdeven");
        v.push_back("S0:even:ne:mdodd");
        v.push_back("S0:even:eq:mdeven");
        v.push_back("S0:even:eq:mdodd");
        return v;
    }();
    return ids;
}

}  // namespace coulter
