#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "coulter/errors.hpp"
#include "coulter/linearized.hpp"
#include "coulter/oracles.hpp"
#include "coulter/verify.hpp"

using namespace coulter;

namespace {

// Naive triple-loop evaluation of the double character sum, straight from
// the defining expression, with no histogram factorization. Test-only
// ground truth for the histogram oracle.
CycInt naive_B(const FieldCtx& ctx, int alpha, i64 a, i64 c, const FqElem& b) {
    const i64 p = ctx.p();
    std::vector<i64> buckets(static_cast<size_t>(p), 0);
    for (i64 y = 1; y < p; ++y) {
        for (i64 z = 1; z < p; ++z) {
            for (i64 enc = 0; enc < ctx.q(); ++enc) {
                auto x = ctx.from_encoding(enc);
                i64 inner = ctx.trace(ctx.add(ctx.mul(ctx.embed_prime(y), ctx.power_map(x, alpha)),
                                              ctx.mul(ctx.embed_prime(z), ctx.mul(b, x))));
                i64 expo = normalize_mod(inner - a * y - c * z, p);
                ++buckets[static_cast<size_t>(expo)];
            }
        }
    }
    return CycInt::from_zeta_buckets(p, buckets);
}

}  // namespace

TEST_CASE("Weil sum over F_3: hand enumeration") {
    // x^2 over F_3 takes values {0, 1, 1}, so sum zeta^{x^2} = 1 + 2 zeta.
    auto f3 = FieldCtx::build(3, 1);
    EnumTables tab(f3);
    auto S = oracle_weil(tab, 1, f3.one(), f3.zero());
    CHECK(S.coeffs() == std::vector<i64>{1, 2});
    CHECK_THROWS_AS(oracle_weil(tab, 1, f3.zero(), f3.one()), ZeroCoefficientError);
}

TEST_CASE("Weil sum magnitude sqrt(q) for b = 0, e/d odd") {
    for (auto [p, e, alpha] : std::vector<std::tuple<i64, int, int>>{{3, 3, 1}, {5, 1, 1}, {3, 5, 5}, {7, 1, 1}}) {
        auto ctx = FieldCtx::build(p, e);
        EnumTables tab(ctx);
        Lcg rng(29);
        for (int i = 0; i < 5; ++i) {
            auto a = ctx.from_encoding(1 + static_cast<i64>(rng.next() % static_cast<u64>(ctx.q() - 1)));
            auto S = oracle_weil(tab, alpha, a, ctx.zero());
            CHECK(S * S.conj() == CycInt::integer(p, ctx.q()));
        }
    }
}

TEST_CASE("summing the Weil sum over all b leaves only x = 0") {
    auto ctx = FieldCtx::build(3, 2);
    EnumTables tab(ctx);
    for (i64 a_enc : {i64(1), i64(3), i64(7)}) {
        CycInt total(3);
        for (i64 b_enc = 0; b_enc < 9; ++b_enc) {
            total = total + oracle_weil(tab, 1, ctx.from_encoding(a_enc), ctx.from_encoding(b_enc));
        }
        CHECK(total == CycInt::integer(3, 9));
    }
}

TEST_CASE("A sum: hand value, zero case, orthogonality over a") {
    auto f3 = FieldCtx::build(3, 1);
    EnumTables t3(f3);
    // (zeta^2 + 2) + (zeta + 2) = 4 + zeta + zeta^2 = 3.
    CHECK(oracle_A(t3, 1, 1) == CycInt::integer(3, 3));

    // A(0) = 0 for odd e with e/d odd.
    for (auto [p, e, alpha] : std::vector<std::tuple<i64, int, int>>{{3, 3, 1}, {5, 1, 1}, {7, 1, 1}, {3, 5, 1}}) {
        auto ctx = FieldCtx::build(p, e);
        EnumTables tab(ctx);
        CHECK(oracle_A(tab, alpha, 0).is_zero());
    }

    // sum_a A(a) = p h_0 - q by orthogonality.
    auto f27 = FieldCtx::build(3, 3);
    EnumTables t27(f27);
    for (int alpha = 1; alpha <= 3; ++alpha) {
        auto h = trace_power_histogram(t27, alpha);
        CycInt total(3);
        for (i64 a = 0; a < 3; ++a) total = total + oracle_A(t27, alpha, a);
        CHECK(total == CycInt::integer(3, 3 * h[0] - 27));
    }
}

TEST_CASE("B sum: hand values and rationality") {
    auto f3 = FieldCtx::build(3, 1);
    EnumTables tab(f3);
    auto b = f3.one();
    CHECK(oracle_B(tab, 1, 0, 0, b) == CycInt::integer(3, 6));
    CHECK(oracle_B(tab, 1, 1, 1, b) == CycInt::integer(3, 3));
    CHECK_THROWS_AS(oracle_B(tab, 1, 0, 0, f3.zero()), ZeroBError);

    // Rational integers on every instance, e/d odd or even alike.
    for (auto [p, e] : std::vector<std::pair<i64, int>>{{3, 2}, {3, 3}, {5, 2}}) {
        auto ctx = FieldCtx::build(p, e);
        EnumTables t(ctx);
        for (int alpha = 1; alpha <= e; ++alpha) {
            auto B = oracle_B(t, alpha, 1, 2, ctx.theta());
            CHECK(B.as_integer().has_value());
        }
    }
}

TEST_CASE("histogram B oracle equals the naive triple loop, p = 3, e <= 3") {
    for (int e = 1; e <= 3; ++e) {
        auto ctx = FieldCtx::build(3, e);
        EnumTables tab(ctx);
        for (int alpha = 1; alpha <= e; ++alpha) {
            for (i64 b_enc = 1; b_enc < ctx.q(); ++b_enc) {
                auto b = ctx.from_encoding(b_enc);
                auto H = joint_histogram(tab, alpha, b);
                auto all = oracle_B_all_from_histogram(3, H);
                for (i64 a = 0; a < 3; ++a) {
                    for (i64 c = 0; c < 3; ++c) {
                        CHECK(all[static_cast<size_t>(a)][static_cast<size_t>(c)] == naive_B(ctx, alpha, a, c, b));
                    }
                }
            }
        }
    }
}

TEST_CASE("field Gauss sum identities") {
    auto f9 = FieldCtx::build(3, 2);
    EnumTables t9(f9);
    auto G9 = oracle_gauss_q(t9);
    CHECK(G9 * G9.conj() == CycInt::integer(3, 9));

    // eta(-1) = eta_hat(-1)^e: for (3,3) this is (-1)^3 = -1, so G^2 = -27.
    auto f27 = FieldCtx::build(3, 3);
    EnumTables t27(f27);
    auto G27 = oracle_gauss_q(t27);
    CHECK(G27 * G27 == CycInt::integer(3, -27));

    auto f5 = FieldCtx::build(5, 1);
    EnumTables t5(f5);
    auto G5 = oracle_gauss_q(t5);
    CHECK(G5 * G5 == CycInt::integer(5, 5));
    // Over the prime field the enumeration reduces to the symbolic sum.
    CHECK(G5 == gauss_sum_prime(5).value);
}

TEST_CASE("quadratic-polynomial sum reduces to the Gauss sum") {
    auto f3 = FieldCtx::build(3, 1);
    EnumTables tab(f3);
    // a2=1, a1=0, a0=0: plain sum of zeta^{x^2} = G.
    CHECK(oracle_quadratic_sum(tab, f3.one(), f3.zero(), f3.zero()) == gauss_sum_prime(3).value);
    // a2=1, a1=1, a0=0: shift term -a1^2 (4 a2)^{-1} = -1, so zeta^2 * G = 1 - zeta.
    CHECK(oracle_quadratic_sum(tab, f3.one(), f3.one(), f3.zero()).coeffs() == std::vector<i64>{1, -1});
    CHECK_THROWS_AS(oracle_quadratic_sum(tab, f3.zero(), f3.one(), f3.zero()), ZeroCoefficientError);

    // Shift invariance: x -> x + t reindexes the sum.
    auto f25 = FieldCtx::build(5, 2);
    EnumTables t25(f25);
    Lcg rng(31);
    for (int i = 0; i < 10; ++i) {
        auto a2 = f25.from_encoding(1 + static_cast<i64>(rng.next() % 24));
        auto a1 = f25.from_encoding(static_cast<i64>(rng.next() % 25));
        auto a0 = f25.from_encoding(static_cast<i64>(rng.next() % 25));
        auto t = f25.from_encoding(static_cast<i64>(rng.next() % 25));
        // f(x+t) = a2 x^2 + (2 a2 t + a1) x + (a2 t^2 + a1 t + a0)
        auto a1s = f25.add(f25.mul(f25.embed_prime(2), f25.mul(a2, t)), a1);
        auto a0s = f25.add(f25.mul(a2, f25.mul(t, t)), f25.add(f25.mul(a1, t), a0));
        CHECK(oracle_quadratic_sum(t25, a2, a1, a0) == oracle_quadratic_sum(t25, a2, a1s, a0s));
    }
}

TEST_CASE("level-set enumeration and counts") {
    auto f3 = FieldCtx::build(3, 1);
    EnumTables t3(f3);
    CHECK(count_n(t3, 1, 0) == 1);
    CHECK(count_n(t3, 1, 1) == 2);
    CHECK(count_n(t3, 1, 2) == 0);
    auto D1 = enumerate_D(t3, 1, 1);
    REQUIRE(D1.size() == 2);
    CHECK(f3.encoding(D1[0]) == 1);
    CHECK(f3.encoding(D1[1]) == 2);

    auto f27 = FieldCtx::build(3, 3);
    EnumTables t27(f27);
    CHECK(count_n(t27, 1, 0) == 9);  // p^{e-1}

    // Partition of F_q across a.
    for (auto [p, e, alpha] : std::vector<std::tuple<i64, int, int>>{{3, 3, 1}, {5, 2, 1}, {7, 1, 1}}) {
        auto ctx = FieldCtx::build(p, e);
        EnumTables tab(ctx);
        i64 total = 0;
        for (i64 a = 0; a < p; ++a) total += count_n(tab, alpha, a);
        CHECK(total == ctx.q());
    }

    CHECK(count_N(t3, 1, 1, 1, f3.one()) == 1);
    auto M = enumerate_M(t3, 1, 1, 1, f3.one());
    REQUIRE(M.size() == 1);
    CHECK(f3.encoding(M[0]) == 1);

    // sum over (a, c) partitions F_q; marginals match count_n.
    for (auto [p, e, alpha] : std::vector<std::tuple<i64, int, int>>{{3, 2, 1}, {5, 2, 2}, {3, 3, 2}}) {
        auto ctx = FieldCtx::build(p, e);
        EnumTables tab(ctx);
        auto b = ctx.theta();
        i64 total = 0;
        for (i64 a = 0; a < p; ++a) {
            i64 row = 0;
            for (i64 c = 0; c < p; ++c) row += count_N(tab, alpha, a, c, b);
            CHECK(row == count_n(tab, alpha, a));
            total += row;
        }
        CHECK(total == ctx.q());
    }
}

TEST_CASE("counting compositions hold for every alpha parity") {
    // p n(a) = p^e + A(a) and p^2 N(a,c) = p^e + A(a) + B(a,c) are pure
    // orthogonality; e/d even points must satisfy them too.
    for (auto [p, e, alpha] : std::vector<std::tuple<i64, int, int>>{{3, 2, 1}, {3, 4, 2}, {5, 2, 1}, {3, 3, 1}}) {
        auto ctx = FieldCtx::build(p, e);
        EnumTables tab(ctx);
        auto b = ctx.theta();
        auto h = trace_power_histogram(tab, alpha);
        auto H = joint_histogram(tab, alpha, b);
        auto B_all = oracle_B_all_from_histogram(p, H);
        for (i64 a = 0; a < p; ++a) {
            i64 A = *oracle_A_from_histogram(p, a, h).as_integer();
            CHECK(p * h[static_cast<size_t>(a)] == ctx.q() + A);
            for (i64 c = 0; c < p; ++c) {
                i64 B = *B_all[static_cast<size_t>(a)][static_cast<size_t>(c)].as_integer();
                CHECK(p * p * H[static_cast<size_t>(a)][static_cast<size_t>(c)] == ctx.q() + A + B);
            }
        }
    }
}

TEST_CASE("prime-subfield scaling law of the Weil sum") {
    // S(y, bz) = kappa eta(-y) zeta^{-y^{-1} z^2 Tr(gamma^{p^alpha+1})}
    // for y, z in F_p^*, e/d odd; kappa is checked via the closed-forms
    // module in its own suite, here we use the oracle on both sides by
    // dividing out: equivalently S(y,bz) * conj(S(1,b)) relations would
    // be weaker, so evaluate the right side from first principles.
    for (auto [p, e, alpha] : std::vector<std::tuple<i64, int, int>>{{3, 3, 1}, {5, 1, 1}}) {
        auto ctx = FieldCtx::build(p, e);
        EnumTables tab(ctx);
        auto b = ctx.theta();
        auto gamma = gamma_for(ctx, alpha, b);
        i64 t = ctx.trace(ctx.power_map(gamma, alpha));
        auto S11 = oracle_weil(tab, alpha, ctx.embed_prime(1), b);
        for (i64 y = 1; y < p; ++y) {
            for (i64 z = 1; z < p; ++z) {
                auto lhs = oracle_weil(tab, alpha, ctx.embed_prime(y), ctx.mul(b, ctx.embed_prime(z)));
                // Ratio form: S(y,bz) = S(1,b) * eta(-y)/eta(-1) * zeta^{(1 - y^{-1} z^2) (-t)}
                i64 phase = normalize_mod(-(mod_inv(y, p) * z % p * z % p - 1) * t, p);
                int eta_ratio = ctx.quad_char(ctx.neg(ctx.embed_prime(y))) * ctx.quad_char(ctx.neg(ctx.one()));
                auto rhs = (S11 * CycInt::zeta_pow(p, phase)).scaled(eta_ratio);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("joint histogram merges across an encoding partition") {
    // Partial histograms built by an independent per-encoding loop over two
    // halves of F_q merge to the table-driven joint histogram.
    auto ctx = FieldCtx::build(3, 3);
    EnumTables tab(ctx);
    auto b = ctx.from_encoding(7);
    auto H = joint_histogram(tab, 2, b);
    auto partial = [&](i64 lo, i64 hi) {
        std::vector<std::vector<i64>> part(3, std::vector<i64>(3, 0));
        for (i64 enc = lo; enc < hi; ++enc) {
            auto x = ctx.from_encoding(enc);
            i64 s = ctx.trace(ctx.power_map(x, 2));
            i64 u = ctx.trace(ctx.mul(b, x));
            ++part[static_cast<size_t>(s)][static_cast<size_t>(u)];
        }
        return part;
    };
    auto lo = partial(0, ctx.q() / 2);
    auto hi = partial(ctx.q() / 2, ctx.q());
    std::vector<std::vector<i64>> merged(3, std::vector<i64>(3, 0));
    for (size_t s = 0; s < 3; ++s)
        for (size_t u = 0; u < 3; ++u) merged[s][u] = lo[s][u] + hi[s][u];
    CHECK(H == merged);
}

TEST_CASE("enumeration ceiling is enforced") {
    auto big = FieldCtx::build(3, 12);  // q = 531441 > default ceiling
    CHECK_THROWS_AS(EnumTables{big}, EnumerationCeilingError);
}

TEST_CASE("parameterized sum instances validate their required fields") {
    auto f3 = FieldCtx::build(3, 1);
    EnumTables tab(f3);

    SumSpec s;
    s.p = 3;
    s.e = 1;
    s.alpha = 1;
    s.kind = SumKind::A;
    CHECK_THROWS_AS(s.validate(), CoulterError);  // missing a
    s.a_fp = 1;
    auto v = evaluate_oracle(tab, s);
    CHECK(v.as_int == 3);
    CHECK(v.cyc == CycInt::integer(3, 3));

    SumSpec w;
    w.p = 3;
    w.e = 1;
    w.alpha = 1;
    w.kind = SumKind::S;
    w.a_enc = 0;  // a must be a unit
    w.b_enc = 1;
    CHECK_THROWS_AS(w.validate(), ZeroCoefficientError);
    w.a_enc = 1;
    CHECK(evaluate_oracle(tab, w).cyc.coeffs() == std::vector<i64>{1, -1});

    SumSpec b;
    b.p = 3;
    b.e = 1;
    b.alpha = 1;
    b.kind = SumKind::B;
    b.a_fp = 0;
    b.c_fp = 0;
    b.b_enc = 0;  // the B family needs b in F_q^*
    CHECK_THROWS_AS(b.validate(), ZeroBError);
    b.b_enc = 1;
    CHECK(evaluate_oracle(tab, b).as_int == 6);

    CHECK(sum_kind_from_name("gaussQ") == SumKind::GaussQ);
    CHECK(!sum_kind_from_name("bogus"));
}
