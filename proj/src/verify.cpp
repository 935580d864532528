#include "coulter/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <tuple>

#include "coulter/closed_forms.hpp"
#include "coulter/errors.hpp"
#include "coulter/oracles.hpp"

namespace coulter {

namespace {

int kind_rank(const std::string& k) {
    static const std::vector<std::string> order = {"S",   "S0",  "A",    "B",    "n",      "N",
                                                   "N-literal", "sum", "marginal", "eq16", "eq17", "gaussP",
                                                   "gaussQ", "quad"};
    for (size_t i = 0; i < order.size(); ++i) {
        if (order[i] == k) return static_cast<int>(i);
    }
    return 99;
}

bool disc_less(const Discrepancy& x, const Discrepancy& y) {
    auto key = [](const Discrepancy& d) {
        return std::tuple<i64, int, int, int, i64, i64, i64>(d.p, d.e, d.alpha, kind_rank(d.kind), d.a, d.c, d.b_enc);
    };
    return key(x) < key(y);
}

bool skip_less(const SkippedPoint& x, const SkippedPoint& y) {
    return std::tuple<i64, int, int, std::string>(x.p, x.e, x.alpha, x.family) <
           std::tuple<i64, int, int, std::string>(y.p, y.e, y.alpha, y.family);
}

struct TaskResult {
    u64 points = 0;
    std::vector<Discrepancy> disc;
    std::vector<SkippedPoint> skipped;
    std::map<std::string, u64> coverage;
};

bool alpha_selected(const GridSpec& g, int e, int alpha) {
    if (g.alphas) {
        if (std::find(g.alphas->begin(), g.alphas->end(), alpha) == g.alphas->end()) return false;
    }
    bool odd = (e / static_cast<int>(gcd_i64(alpha, e))) % 2 != 0;
    switch (g.parity) {
        case GridSpec::Parity::OddOnly: return odd;
        case GridSpec::Parity::EvenOnly: return !odd;
        case GridSpec::Parity::Both: return true;
    }
    return true;
}

std::vector<i64> distinct_draws(Lcg& rng, i64 modulus, int count) {
    std::vector<i64> out;
    if (modulus <= count) {
        for (i64 k = 0; k < modulus; ++k) out.push_back(k);
        return out;
    }
    while (static_cast<int>(out.size()) < count) {
        i64 k = static_cast<i64>(rng.next() % static_cast<u64>(modulus));
        if (std::find(out.begin(), out.end(), k) == out.end()) out.push_back(k);
    }
    return out;
}

// b values for one (p, e, alpha) point, as encodings, ascending.
std::vector<i64> b_encodings(const GridSpec& g, const FieldCtx& ctx, int alpha) {
    const i64 q = ctx.q();
    std::vector<i64> encs;
    if (g.b_policy == GridSpec::BPolicy::ExhaustiveThenSample && q <= g.exhaustive_threshold) {
        encs.reserve(static_cast<size_t>(q - 1));
        for (i64 enc = 1; enc < q; ++enc) encs.push_back(enc);
        return encs;
    }
    Lcg rng(substream_seed(g.seed, ctx.p(), ctx.e(), alpha));
    for (i64 k : distinct_draws(rng, q - 1, g.b_sample_count)) {
        encs.push_back(ctx.encoding(ctx.pow(ctx.theta(), static_cast<u64>(k))));
    }
    std::sort(encs.begin(), encs.end());
    encs.erase(std::unique(encs.begin(), encs.end()), encs.end());
    return encs;
}

// Sampled (a, b) encodings for the Weil sweep above the exhaustive
// threshold: weil_pairs pairs with b != 0 plus three b = 0 pairs.
std::vector<std::pair<i64, i64>> weil_pairs_sampled(const GridSpec& g, const FieldCtx& ctx, int alpha) {
    const i64 q = ctx.q();
    Lcg rng(substream_seed(g.seed, ctx.p(), ctx.e(), alpha) ^ 0x5EEDULL);
    std::vector<std::pair<i64, i64>> pairs;
    for (int i = 0; i < g.weil_pairs; ++i) {
        i64 ja = static_cast<i64>(rng.next() % static_cast<u64>(q - 1));
        i64 jb = static_cast<i64>(rng.next() % static_cast<u64>(q - 1));
        pairs.emplace_back(ctx.encoding(ctx.pow(ctx.theta(), static_cast<u64>(ja))),
                           ctx.encoding(ctx.pow(ctx.theta(), static_cast<u64>(jb))));
    }
    for (int i = 0; i < 3; ++i) {
        i64 ja = static_cast<i64>(rng.next() % static_cast<u64>(q - 1));
        pairs.emplace_back(ctx.encoding(ctx.pow(ctx.theta(), static_cast<u64>(ja))), 0);
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return pairs;
}

void tick(TaskResult& r, const std::string& id) { ++r.coverage[id]; }

void add_disc(TaskResult& r, Discrepancy d) { r.disc.push_back(std::move(d)); }

std::string int_str(i64 v) { return std::to_string(v); }

}  // namespace

u64 substream_seed(u64 seed, i64 p, int e, int alpha) {
    return seed ^ (static_cast<u64>(p) * 0x9E3779B97F4A7C15ULL + static_cast<u64>(e) * 0x100000001B3ULL +
                   static_cast<u64>(alpha) * 1099511628211ULL);
}

namespace {

TaskResult run_field(const GridSpec& g, i64 p, int e) {
    TaskResult r;
    FieldCtx ctx = FieldCtx::build(p, e);
    const i64 q = ctx.q();

    if (q > enumeration_ceiling()) {
        r.skipped.push_back({p, e, 0, "field", "q exceeds the enumeration ceiling " + std::to_string(enumeration_ceiling())});
        return r;
    }
    EnumTables tab(ctx);

    // Prime-field Gauss sum law: G^2 = legendre(-1|p) * p.
    {
        GaussSumSymbolic G = gauss_sum_prime(p);
        CycInt lhs = G.value * G.value;
        CycInt rhs = CycInt::integer(p, legendre(p - 1, p) * p);
        ++r.points;
        if (lhs != rhs) {
            add_disc(r, {p, e, 0, "gaussP", -1, -1, -1, lhs.to_string(), rhs.to_string(), "", "gauss_sum_prime law"});
        }
    }
    // Field Gauss sum: G_q conj(G_q) = q and G_q^2 = eta(-1) q.
    CycInt Gq = oracle_gauss_q(tab);
    {
        ++r.points;
        if (Gq * Gq.conj() != CycInt::integer(p, q)) {
            add_disc(r, {p, e, 0, "gaussQ", -1, -1, -1, (Gq * Gq.conj()).to_string(), int_str(q), "", "|G|^2 != q"});
        }
        ++r.points;
        int eta_m1 = ctx.quad_char(ctx.neg(ctx.one()));
        if (Gq * Gq != CycInt::integer(p, eta_m1 * q)) {
            add_disc(r, {p, e, 0, "gaussQ", -1, -1, -1, (Gq * Gq).to_string(), int_str(eta_m1 * q), "", "G^2 != eta(-1) q"});
        }
        ++r.points;
        if (closed_gauss_q(p, e).expand() != Gq) {
            add_disc(r, {p, e, 0, "gaussQ", -1, -1, -1, Gq.to_string(), closed_gauss_q(p, e).to_string(), "",
                         "closed Gauss sum vs enumeration"});
        }
    }
    // Quadratic-polynomial sum identity on seeded random triples:
    // sum_x chi(a2 x^2 + a1 x + a0) = chi(a0 - a1^2 (4 a2)^{-1}) eta(a2) G_q.
    {
        Lcg rng(substream_seed(g.seed, p, e, 0) ^ 0x71ADULL);
        for (int i = 0; i < g.quad_triples; ++i) {
            FqElem a2 = ctx.from_encoding(tab.exp_of(static_cast<i64>(rng.next() % static_cast<u64>(q - 1))));
            FqElem a1 = ctx.from_encoding(static_cast<i64>(rng.next() % static_cast<u64>(q)));
            FqElem a0 = ctx.from_encoding(static_cast<i64>(rng.next() % static_cast<u64>(q)));
            CycInt lhs = oracle_quadratic_sum(tab, a2, a1, a0);
            FqElem four_a2 = ctx.mul(ctx.embed_prime(4), a2);
            FqElem shift = ctx.sub(a0, ctx.mul(ctx.mul(a1, a1), ctx.inv(four_a2)));
            CycInt rhs = (Gq * CycInt::zeta_pow(p, ctx.trace(shift))).scaled(ctx.quad_char(a2));
            ++r.points;
            if (lhs != rhs) {
                add_disc(r, {p, e, 0, "quad", ctx.encoding(a2), ctx.encoding(a1), ctx.encoding(a0),
                             lhs.to_string(), rhs.to_string(), "", "quadratic sum identity"});
            }
        }
    }

    const i64 pe = q;  // p^e
    for (int alpha = 1; alpha <= e; ++alpha) {
        if (!alpha_selected(g, e, alpha)) continue;
        const i64 d = gcd_i64(alpha, e);
        const bool odd = (e / d) % 2 != 0;

        std::vector<i64> h = trace_power_histogram(tab, alpha);
        // Partition check: the level sets of Tr(x^{p^alpha+1}) cover F_q.
        {
            i64 total = 0;
            for (i64 v : h) total += v;
            ++r.points;
            if (total != q) add_disc(r, {p, e, alpha, "sum", -1, -1, -1, int_str(total), int_str(q), "", "sum_a n != q"});
        }

        std::vector<i64> A_int(static_cast<size_t>(p), 0);
        for (i64 a = 0; a < p; ++a) {
            CycInt A = oracle_A_from_histogram(p, a, h);
            auto ai = A.as_integer();
            ++r.points;
            if (!ai) {
                add_disc(r, {p, e, alpha, "A", a, -1, -1, A.to_string(), "<rational>", "", "oracle A not rational"});
                continue;
            }
            A_int[static_cast<size_t>(a)] = *ai;
            // p * n(a) = p^e + A(a): pure orthogonality, all alpha.
            ++r.points;
            if (p * h[static_cast<size_t>(a)] != pe + *ai) {
                add_disc(r, {p, e, alpha, "eq16", a, -1, -1, int_str(h[static_cast<size_t>(a)]),
                             int_str(pe + *ai), "", "n vs A composition"});
            }
            if (odd) {
                ClosedResult ca = closed_A(p, e, alpha, a);
                tick(r, ca.branch.case_id);
                ++r.points;
                if (ca.value.rational != *ai) {
                    add_disc(r, {p, e, alpha, "A", a, -1, -1, int_str(*ai), ca.value.to_string(), ca.branch.case_id, ""});
                }
                i64 cn = closed_n(p, e, alpha, a);
                tick(r, closed_n_branch(p, e, alpha, a).case_id);
                ++r.points;
                if (cn != h[static_cast<size_t>(a)]) {
                    add_disc(r, {p, e, alpha, "n", a, -1, -1, int_str(h[static_cast<size_t>(a)]), int_str(cn),
                                 closed_n_branch(p, e, alpha, a).case_id, ""});
                }
            }
        }
        if (!odd) {
            r.skipped.push_back({p, e, alpha, "closed-A/B/n/N",
                                 "not applicable: closed forms require e/gcd(alpha,e) odd"});
        }

        // B / N family over b.
        for (i64 b_enc : b_encodings(g, ctx, alpha)) {
            FqElem b = ctx.from_encoding(b_enc);
            auto H = joint_histogram(tab, alpha, b);
            {
                i64 total = 0;
                for (const auto& row : H)
                    for (i64 v : row) total += v;
                ++r.points;
                if (total != q) {
                    add_disc(r, {p, e, alpha, "sum", -1, -1, b_enc, int_str(total), int_str(q), "", "sum_{a,c} N != q"});
                }
            }
            for (i64 a = 0; a < p; ++a) {
                i64 row = 0;
                for (i64 v : H[static_cast<size_t>(a)]) row += v;
                ++r.points;
                if (row != h[static_cast<size_t>(a)]) {
                    add_disc(r, {p, e, alpha, "marginal", a, -1, b_enc, int_str(row),
                                 int_str(h[static_cast<size_t>(a)]), "", "sum_c N(a,c) != n(a)"});
                }
            }
            auto B_all = oracle_B_all_from_histogram(p, H);

            std::optional<i64> t;
            if (odd) {
                FqElem gamma = gamma_for(ctx, alpha, b);
                t = ctx.trace(ctx.power_map(gamma, alpha));
            }
            for (i64 a = 0; a < p; ++a) {
                for (i64 c = 0; c < p; ++c) {
                    const CycInt& B = B_all[static_cast<size_t>(a)][static_cast<size_t>(c)];
                    auto bi = B.as_integer();
                    ++r.points;
                    if (!bi) {
                        add_disc(r, {p, e, alpha, "B", a, c, b_enc, B.to_string(), "<rational>", "", "oracle B not rational"});
                        continue;
                    }
                    // p^2 N(a,c) = p^e + A(a) + B(a,c): all alpha.
                    ++r.points;
                    if (p * p * H[static_cast<size_t>(a)][static_cast<size_t>(c)] != pe + A_int[static_cast<size_t>(a)] + *bi) {
                        add_disc(r, {p, e, alpha, "eq17", a, c, b_enc,
                                     int_str(H[static_cast<size_t>(a)][static_cast<size_t>(c)]),
                                     int_str(pe + A_int[static_cast<size_t>(a)] + *bi), "", "N vs A+B composition"});
                    }
                    if (!odd) continue;
                    try {
                        ClosedResult cb = closed_B_from_trace(p, e, alpha, a, c, *t);
                        tick(r, cb.branch.case_id);
                        ++r.points;
                        if (cb.value.rational != *bi) {
                            add_disc(r, {p, e, alpha, "B", a, c, b_enc, int_str(*bi), cb.value.to_string(),
                                         cb.branch.case_id, ""});
                        }
                        i64 cn = closed_N_from_trace(p, e, alpha, a, c, *t);
                        ++r.points;
                        if (cn != H[static_cast<size_t>(a)][static_cast<size_t>(c)]) {
                            add_disc(r, {p, e, alpha, "N", a, c, b_enc,
                                         int_str(H[static_cast<size_t>(a)][static_cast<size_t>(c)]), int_str(cn),
                                         cb.branch.case_id, ""});
                        }
                        if (auto lit = closed_N_literal(p, e, alpha, a, c, *t)) {
                            ++r.points;
                            if (*lit != cn) {
                                add_disc(r, {p, e, alpha, "N-literal", a, c, b_enc, int_str(cn), int_str(*lit),
                                             cb.branch.case_id, "literal table vs composition"});
                            }
                        }
                    } catch (const CoulterError& ex) {
                        add_disc(r, {p, e, alpha, "B", a, c, b_enc, int_str(*bi), "<error>", "", ex.what()});
                    }
                }
            }
        }

        // Weil sums S(a, b), both parities of e/d.
        {
            std::vector<i64> pm_table = tab.power_map_table(alpha);
            std::vector<std::pair<i64, i64>> pairs;
            if (g.b_policy == GridSpec::BPolicy::ExhaustiveThenSample && q <= g.exhaustive_threshold) {
                for (i64 a_enc = 1; a_enc < q; ++a_enc)
                    for (i64 b_enc2 = 0; b_enc2 < q; ++b_enc2) pairs.emplace_back(a_enc, b_enc2);
            } else {
                pairs = weil_pairs_sampled(g, ctx, alpha);
            }
            i64 cur_a = -1;
            std::optional<LinearizedMap> map;
            for (auto [a_enc, b_enc] : pairs) {
                if (a_enc != cur_a) {
                    map.emplace(ctx, ctx.from_encoding(a_enc), alpha);
                    cur_a = a_enc;
                }
                FqElem b = ctx.from_encoding(b_enc);
                CycInt oracle = oracle_weil_with_table(tab, pm_table, ctx.from_encoding(a_enc), b);
                ClosedResult cs = closed_S_from_map(*map, b);
                tick(r, cs.branch.case_id);
                ++r.points;
                if (cs.value.expand() != oracle) {
                    add_disc(r, {p, e, alpha, b_enc == 0 ? "S0" : "S", a_enc, -1, b_enc, oracle.to_string(),
                                 cs.value.to_string(), cs.branch.case_id, ""});
                }
            }
        }
    }
    return r;
}

}  // namespace

nlohmann::json GridSpec::to_json() const {
    nlohmann::json j;
    j["primes"] = primes;
    j["max_q"] = max_q;
    if (alphas) {
        j["alphas"] = *alphas;
    } else {
        j["alphas"] = "all";
    }
    j["b_policy"] = b_policy == BPolicy::ExhaustiveThenSample ? "exhaustive" : ("sample:" + std::to_string(b_sample_count));
    j["exhaustive_threshold"] = exhaustive_threshold;
    j["b_sample_count"] = b_sample_count;
    j["parity"] = parity == Parity::OddOnly ? "odd" : parity == Parity::EvenOnly ? "even" : "both";
    j["seed"] = seed;
    j["weil_pairs"] = weil_pairs;
    j["quad_triples"] = quad_triples;
    return j;
}

std::vector<std::string> VerifyReport::uncovered_branches() const {
    std::vector<std::string> out;
    for (const auto& id : registered_branch_ids()) {
        auto it = branch_coverage.find(id);
        if (it == branch_coverage.end() || it->second == 0) out.push_back(id);
    }
    return out;
}

nlohmann::json VerifyReport::to_json() const {
    nlohmann::json j;
    j["grid"] = grid_echo;
    j["points_checked"] = points_checked;
    j["mutation_enabled"] = selftest_mutation_enabled();
    nlohmann::json darr = nlohmann::json::array();
    for (const auto& dd : discrepancies) {
        darr.push_back({{"p", dd.p},
                        {"e", dd.e},
                        {"alpha", dd.alpha},
                        {"kind", dd.kind},
                        {"a", dd.a},
                        {"c", dd.c},
                        {"b_enc", dd.b_enc},
                        {"oracle", dd.oracle_value},
                        {"closed", dd.closed_value},
                        {"branch", dd.branch},
                        {"note", dd.note}});
    }
    j["discrepancies"] = darr;
    nlohmann::json sarr = nlohmann::json::array();
    for (const auto& s : skipped) {
        sarr.push_back({{"p", s.p}, {"e", s.e}, {"alpha", s.alpha}, {"family", s.family}, {"reason", s.reason}});
    }
    j["skipped"] = sarr;
    j["branch_coverage"] = branch_coverage;
    j["uncovered_branches"] = uncovered_branches();
    j["passed"] = passed();
    return j;
}

VerifyReport sweep(const GridSpec& grid) {
    auto t0 = std::chrono::steady_clock::now();

    std::vector<std::pair<i64, int>> tasks;
    std::vector<i64> primes = grid.primes;
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
    for (i64 p : primes) {
        i64 q = p;
        for (int e = 1; q <= grid.max_q; ++e) {
            tasks.emplace_back(p, e);
            if (q > grid.max_q / p) break;
            q *= p;
        }
    }

    std::vector<TaskResult> results(tasks.size());
    const int jobs = std::max(1, grid.jobs);
    if (jobs == 1) {
        for (size_t i = 0; i < tasks.size(); ++i) results[i] = run_field(grid, tasks[i].first, tasks[i].second);
    } else {
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                results[i] = run_field(grid, tasks[i].first, tasks[i].second);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    VerifyReport rep;
    rep.grid_echo = grid.to_json();
    for (const auto& id : registered_branch_ids()) rep.branch_coverage[id] = 0;
    for (auto& tr : results) {
        rep.points_checked += tr.points;
        for (auto& d : tr.disc) rep.discrepancies.push_back(std::move(d));
        for (auto& s : tr.skipped) rep.skipped.push_back(std::move(s));
        for (const auto& [id, n] : tr.coverage) rep.branch_coverage[id] += n;
    }
    std::sort(rep.discrepancies.begin(), rep.discrepancies.end(), disc_less);
    std::sort(rep.skipped.begin(), rep.skipped.end(), skip_less);

    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::optional<BranchInstance> find_branch_instance(const std::string& case_id, const GridSpec& grid) {
    std::vector<i64> primes = grid.primes;
    std::sort(primes.begin(), primes.end());
    const bool want_A = case_id.rfind("A:", 0) == 0;
    const bool want_n = case_id.rfind("n:", 0) == 0;
    const bool want_B = case_id.rfind("B:", 0) == 0;
    const bool want_S = case_id.rfind("Sperm", 0) == 0 || case_id.rfind("Snonperm", 0) == 0 || case_id.rfind("S0", 0) == 0;
    if (!want_A && !want_n && !want_B && !want_S) return std::nullopt;

    for (i64 p : primes) {
        for (int e = 1; checked_pow_i64(p, e) <= grid.max_q; ++e) {
            FieldCtx ctx = FieldCtx::build(p, e);
            const i64 q = ctx.q();
            for (int alpha = 1; alpha <= e; ++alpha) {
                if (!alpha_selected(grid, e, alpha)) continue;
                const bool odd = (e / static_cast<int>(gcd_i64(alpha, e))) % 2 != 0;

                if ((want_A || want_n) && odd) {
                    for (i64 a = 0; a < p; ++a) {
                        std::string id = want_A ? closed_A(p, e, alpha, a).branch.case_id
                                                : closed_n_branch(p, e, alpha, a).case_id;
                        if (id == case_id) return BranchInstance{p, e, alpha, a, -1, -1, want_A ? "A" : "n"};
                    }
                }
                if (want_B && odd) {
                    // Pairs (b, t) in b-encoding order; then scan (a, c, b).
                    std::vector<std::pair<i64, i64>> bt;
                    for (i64 b_enc : b_encodings(grid, ctx, alpha)) {
                        FqElem b = ctx.from_encoding(b_enc);
                        FqElem gamma = gamma_for(ctx, alpha, b);
                        bt.emplace_back(b_enc, ctx.trace(ctx.power_map(gamma, alpha)));
                    }
                    for (i64 a = 0; a < p; ++a)
                        for (i64 c = 0; c < p; ++c)
                            for (auto [b_enc, t] : bt) {
                                if (closed_B_from_trace(p, e, alpha, a, c, t).branch.case_id == case_id) {
                                    return BranchInstance{p, e, alpha, a, c, b_enc, "B"};
                                }
                            }
                }
                if (want_S) {
                    std::vector<i64> b_list;
                    bool exhaustive = grid.b_policy == GridSpec::BPolicy::ExhaustiveThenSample &&
                                      q <= grid.exhaustive_threshold;
                    if (exhaustive) {
                        for (i64 enc = 0; enc < q; ++enc) b_list.push_back(enc);
                    } else {
                        b_list.push_back(0);
                        for (auto [ae, be] : weil_pairs_sampled(grid, ctx, alpha)) b_list.push_back(be);
                        std::sort(b_list.begin(), b_list.end());
                        b_list.erase(std::unique(b_list.begin(), b_list.end()), b_list.end());
                    }
                    std::vector<i64> a_list;
                    if (exhaustive) {
                        for (i64 enc = 1; enc < q; ++enc) a_list.push_back(enc);
                    } else {
                        Lcg rng(substream_seed(grid.seed, p, e, alpha) ^ 0x5EEDULL);
                        for (i64 k : distinct_draws(rng, q - 1, grid.weil_pairs)) {
                            a_list.push_back(ctx.encoding(ctx.pow(ctx.theta(), static_cast<u64>(k))));
                        }
                        std::sort(a_list.begin(), a_list.end());
                    }
                    for (i64 a_enc : a_list) {
                        LinearizedMap map(ctx, ctx.from_encoding(a_enc), alpha);
                        for (i64 b_enc : b_list) {
                            ClosedResult cs = closed_S_from_map(map, ctx.from_encoding(b_enc));
                            if (cs.branch.case_id == case_id) {
                                return BranchInstance{p, e, alpha, a_enc, -1, b_enc, b_enc == 0 ? "S0" : "S"};
                            }
                        }
                    }
                }
            }
            if (checked_pow_i64(p, e) > grid.max_q / p) break;
        }
    }
    return std::nullopt;
}

}  // namespace coulter
