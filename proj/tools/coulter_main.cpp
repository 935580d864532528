// coulter_main.cpp
//
// Command-line front end: evaluate a single sum (oracle, closed form, or
// both with exact comparison), enumerate the level sets D/M, inspect a
// field context, or run a verification sweep and write the JSON report.
//
// Exit codes: 0 success, 2 usage/scope errors, 3 exact-comparison mismatch
// or a failed verification run. The env var COULTER_MAX_Q overrides the
// enumeration ceiling.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "coulter/closed_forms.hpp"
#include "coulter/errors.hpp"
#include "coulter/field.hpp"
#include "coulter/oracles.hpp"
#include "coulter/verify.hpp"

using json = nlohmann::json;
using namespace coulter;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;

std::string poly_string(const std::vector<i64>& coeffs) {
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
        if (coeffs[static_cast<size_t>(i)] == 0) continue;
        if (!first) os << " + ";
        first = false;
        i64 c = coeffs[static_cast<size_t>(i)];
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

FqElem parse_b_spec(const FieldCtx& ctx, const std::string& spec) {
    if (spec.rfind("theta", 0) == 0) {
        u64 k = 1;
        if (spec.size() > 5) {
            if (spec[5] != '^') throw CoulterError("b spec: expected theta^k");
            k = std::stoull(spec.substr(6));
        }
        return ctx.pow(ctx.theta(), k);
    }
    std::vector<i64> coeffs;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) coeffs.push_back(std::stoll(item));
    if (static_cast<int>(coeffs.size()) > ctx.e()) throw CoulterError("b spec: more coefficients than the degree");
    coeffs.resize(static_cast<size_t>(ctx.e()), 0);
    return ctx.from_coeffs(std::move(coeffs));
}

json value_json(const CycInt& v) {
    if (auto n = v.as_integer()) return json{{"kind", "int"}, {"int", *n}};
    return json{{"kind", "cyclotomic"}, {"coeffs", v.coeffs()}, {"p", v.p()}};
}

json value_json(i64 n) { return json{{"kind", "int"}, {"int", n}}; }

std::string value_str(const json& v) {
    if (v["kind"] == "int") return std::to_string(v["int"].get<i64>());
    std::ostringstream os;
    os << v["coeffs"].dump() << " (coeffs of zeta^0..zeta^" << v["p"].get<i64>() - 2 << ")";
    return os.str();
}

void print_record(const json& rec, const std::string& format) {
    if (format == "json") {
        std::cout << rec.dump(2) << "\n";
        return;
    }
    for (auto& [k, v] : rec["spec"].items()) {
        std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
    std::cout << "value: " << value_str(rec["value"]) << "\n";
    if (rec.contains("closed_value")) std::cout << "closed_value: " << value_str(rec["closed_value"]) << "\n";
    if (rec.contains("branch") && !rec["branch"].get<std::string>().empty())
        std::cout << "branch: " << rec["branch"].get<std::string>() << "\n";
    if (rec.contains("gamma_enc")) std::cout << "gamma_enc: " << rec["gamma_enc"].get<i64>() << "\n";
    if (rec.contains("gamma_trace")) std::cout << "gamma_trace: " << rec["gamma_trace"].get<i64>() << "\n";
    std::cout << "mode: " << rec["mode"].get<std::string>() << "\n";
}

struct EvalArgs {
    i64 p = 0;
    int e = 1;
    int alpha = 1;
    std::string sum;
    i64 a = 0;
    i64 c = 0;
    std::string b_spec;
    std::string mode = "both";
    std::string format = "table";
};

int run_eval(const EvalArgs& args) {
    FieldCtx ctx = FieldCtx::build(args.p, args.e);
    const bool want_oracle = args.mode == "oracle" || args.mode == "both";
    const bool want_closed = args.mode == "closed" || args.mode == "both";

    auto kind = sum_kind_from_name(args.sum);
    if (!kind) throw CoulterError("unknown --sum kind: " + args.sum);

    SumSpec spec;
    spec.p = args.p;
    spec.e = args.e;
    spec.alpha = args.alpha;
    spec.kind = *kind;
    json spec_echo{{"p", args.p}, {"e", args.e}, {"alpha", args.alpha}, {"sum", args.sum}};
    switch (*kind) {
        case SumKind::S:
        case SumKind::S0:
            spec.a_enc = args.a;
            spec.b_enc = (*kind == SumKind::S0 || args.b_spec.empty()) ? 0 : ctx.encoding(parse_b_spec(ctx, args.b_spec));
            spec_echo["a_enc"] = *spec.a_enc;
            spec_echo["b_enc"] = *spec.b_enc;
            break;
        case SumKind::A:
        case SumKind::nCount:
            spec.a_fp = args.a;
            spec_echo["a"] = args.a;
            break;
        case SumKind::B:
        case SumKind::NCount:
            spec.a_fp = args.a;
            spec.c_fp = args.c;
            if (args.b_spec.empty()) throw CoulterError(args.sum + " needs --b");
            spec.b_enc = ctx.encoding(parse_b_spec(ctx, args.b_spec));
            spec_echo["a"] = args.a;
            spec_echo["c"] = args.c;
            spec_echo["b_enc"] = *spec.b_enc;
            break;
        default:
            break;
    }
    spec.validate();

    json rec;
    rec["spec"] = spec_echo;

    std::optional<json> oracle_v, closed_v;
    std::string branch;
    if (want_oracle) {
        EnumTables tab(ctx);
        OracleValue v = evaluate_oracle(tab, spec);
        oracle_v = v.as_int ? value_json(*v.as_int) : value_json(v.cyc);
    }
    if (want_closed) {
        ClosedResult r = evaluate_closed(ctx, spec);
        closed_v = value_json(r.value.expand());
        branch = r.branch.case_id;
        if (r.gamma_trace) {
            rec["gamma_enc"] = ctx.encoding(gamma_for(ctx, args.alpha, ctx.from_encoding(*spec.b_enc)));
            rec["gamma_trace"] = *r.gamma_trace;
        }
    }

    rec["branch"] = branch;
    if (oracle_v && closed_v) {
        bool equal = *oracle_v == *closed_v;
        rec["value"] = *oracle_v;
        rec["mode"] = equal ? "both(equal)" : "both(MISMATCH)";
        if (!equal) rec["closed_value"] = *closed_v;
        print_record(rec, args.format);
        return equal ? kExitOk : kExitMismatch;
    }
    rec["value"] = oracle_v ? *oracle_v : *closed_v;
    if (!rec.contains("mode")) rec["mode"] = oracle_v ? "oracle" : "closed-form";
    print_record(rec, args.format);
    return kExitOk;
}

u64 fnv1a(const std::vector<i64>& data) {
    u64 h = 1469598103934665603ULL;
    for (i64 v : data) {
        for (int byte = 0; byte < 8; ++byte) {
            h ^= static_cast<u64>((v >> (8 * byte)) & 0xFF);
            h *= 1099511628211ULL;
        }
    }
    return h;
}

int run_field_info(i64 p, int e, const std::string& format) {
    FieldCtx ctx = FieldCtx::build(p, e);
    json rec{{"p", p}, {"e", e}, {"q", ctx.q()}};
    rec["modulus"] = ctx.modulus();
    rec["modulus_poly"] = poly_string(ctx.modulus());
    rec["theta_enc"] = ctx.encoding(ctx.theta());
    rec["theta_poly"] = poly_string(ctx.theta().coeffs);
    rec["trace_basis"] = ctx.trace_basis();
    if (ctx.q() <= enumeration_ceiling()) {
        std::vector<i64> traces(static_cast<size_t>(ctx.q()));
        for (i64 enc = 0; enc < ctx.q(); ++enc) traces[static_cast<size_t>(enc)] = ctx.trace(ctx.from_encoding(enc));
        char buf[32];
        std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(traces)));
        rec["trace_table_digest"] = std::string(buf);
    }
    if (format == "json") {
        std::cout << rec.dump(2) << "\n";
    } else {
        std::cout << "p: " << p << "\ne: " << e << "\nq: " << ctx.q() << "\n"
                  << "modulus: " << rec["modulus_poly"].get<std::string>() << "  coeffs "
                  << json(ctx.modulus()).dump() << "\n"
                  << "theta: enc " << rec["theta_enc"].get<i64>() << " = " << rec["theta_poly"].get<std::string>()
                  << "\n"
                  << "trace_basis: " << json(ctx.trace_basis()).dump() << "\n";
        if (rec.contains("trace_table_digest"))
            std::cout << "trace_table_digest: " << rec["trace_table_digest"].get<std::string>() << "\n";
    }
    return kExitOk;
}

int run_enumerate(const std::string& set, i64 p, int e, int alpha, i64 a, i64 c, const std::string& b_spec,
                  const std::string& format) {
    FieldCtx ctx = FieldCtx::build(p, e);
    EnumTables tab(ctx);
    std::vector<FqElem> elems;
    std::optional<i64> closed_count;
    const bool odd = (e / gcd_i64(alpha, e)) % 2 != 0;
    if (set == "D") {
        elems = enumerate_D(tab, alpha, a);
        if (odd) closed_count = closed_n(p, e, alpha, a);
    } else if (set == "M") {
        if (b_spec.empty()) throw CoulterError("enumerate --set M needs --b");
        FqElem b = parse_b_spec(ctx, b_spec);
        elems = enumerate_M(tab, alpha, a, c, b);
        if (odd) closed_count = closed_N(ctx, alpha, a, c, b);
    } else {
        throw CoulterError("unknown --set: " + set);
    }
    std::vector<i64> encs;
    encs.reserve(elems.size());
    for (const auto& x : elems) encs.push_back(ctx.encoding(x));
    json rec{{"set", set}, {"p", p}, {"e", e}, {"alpha", alpha}, {"a", a}, {"count", encs.size()}, {"elements", encs}};
    if (set == "M") rec["c"] = c;
    if (closed_count) rec["closed_count"] = *closed_count;
    if (format == "json") {
        std::cout << rec.dump(2) << "\n";
    } else {
        std::cout << "set " << set << ": " << json(encs).dump() << "\ncount: " << encs.size() << "\n";
        if (closed_count) std::cout << "closed_count: " << *closed_count << "\n";
    }
    if (closed_count && static_cast<i64>(encs.size()) != *closed_count) return kExitMismatch;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact evaluation and verification of Coulter-polynomial character sums over GF(p^e)"};
    app.require_subcommand(1);

    EvalArgs ev;
    auto* eval = app.add_subcommand("eval", "evaluate one sum by oracle, closed form, or both");
    eval->add_option("--p", ev.p, "odd prime")->required();
    eval->add_option("--e", ev.e, "extension degree");
    eval->add_option("--alpha", ev.alpha, "Frobenius parameter");
    eval->add_option("--sum", ev.sum, "A|B|S|S0|n|N|gaussP|gaussQ")->required();
    eval->add_option("--a", ev.a, "residue mod p (A/B/n/N) or element encoding (S/S0)");
    eval->add_option("--c", ev.c, "residue mod p (B/N)");
    eval->add_option("--b", ev.b_spec, "theta^k or comma-separated coefficients, constant term first");
    eval->add_option("--mode", ev.mode, "oracle|closed|both")->check(CLI::IsMember({"oracle", "closed", "both"}));
    eval->add_option("--format", ev.format, "json|table")->check(CLI::IsMember({"json", "table"}));

    i64 fi_p = 0;
    int fi_e = 1;
    std::string fi_format = "table";
    auto* finfo = app.add_subcommand("field-info", "print the deterministic field context");
    finfo->add_option("--p", fi_p)->required();
    finfo->add_option("--e", fi_e);
    finfo->add_option("--format", fi_format)->check(CLI::IsMember({"json", "table"}));

    std::string en_set;
    i64 en_p = 0, en_a = 0, en_c = 0;
    int en_e = 1, en_alpha = 1;
    std::string en_b, en_format = "table";
    auto* enu = app.add_subcommand("enumerate", "list a level set D or M with its count");
    enu->add_option("--set", en_set, "D|M")->required();
    enu->add_option("--p", en_p)->required();
    enu->add_option("--e", en_e);
    enu->add_option("--alpha", en_alpha);
    enu->add_option("--a", en_a, "residue mod p");
    enu->add_option("--c", en_c, "residue mod p (M only)");
    enu->add_option("--b", en_b, "b spec (M only)");
    enu->add_option("--format", en_format)->check(CLI::IsMember({"json", "table"}));

    GridSpec grid;
    std::string v_primes = "3,5,7,11,13", v_bpolicy = "exhaustive", v_parity = "both", v_out;
    bool v_mutate = false;
    auto* ver = app.add_subcommand("verify", "oracle-vs-closed-form sweep over a parameter grid");
    ver->add_option("--primes", v_primes, "comma-separated odd primes");
    ver->add_option("--max-q", grid.max_q, "largest field size swept");
    ver->add_option("--b-policy", v_bpolicy, "exhaustive | sample:N");
    ver->add_option("--seed", grid.seed, "sampling seed");
    ver->add_option("--parity", v_parity, "odd|even|both (parity of e/gcd(alpha,e))");
    ver->add_option("--out", v_out, "report file (default: stdout)");
    ver->add_option("--jobs", grid.jobs, "worker threads");
    ver->add_flag("--self-test-mutate", v_mutate, "flip the documented sign mutant; the sweep must fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);  // prints message/help
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*eval) return run_eval(ev);
        if (*finfo) return run_field_info(fi_p, fi_e, fi_format);
        if (*enu) return run_enumerate(en_set, en_p, en_e, en_alpha, en_a, en_c, en_b, en_format);
        if (*ver) {
            std::stringstream ps(v_primes);
            std::string item;
            grid.primes.clear();
            while (std::getline(ps, item, ',')) grid.primes.push_back(std::stoll(item));
            if (v_bpolicy == "exhaustive") {
                grid.b_policy = GridSpec::BPolicy::ExhaustiveThenSample;
            } else if (v_bpolicy.rfind("sample:", 0) == 0) {
                grid.b_policy = GridSpec::BPolicy::SampleOnly;
                grid.b_sample_count = std::stoi(v_bpolicy.substr(7));
            } else {
                std::cerr << "error: --b-policy must be exhaustive or sample:N\n";
                return kExitUsage;
            }
            if (v_parity == "odd") {
                grid.parity = GridSpec::Parity::OddOnly;
            } else if (v_parity == "even") {
                grid.parity = GridSpec::Parity::EvenOnly;
            } else if (v_parity == "both") {
                grid.parity = GridSpec::Parity::Both;
            } else {
                std::cerr << "error: --parity must be odd, even or both\n";
                return kExitUsage;
            }
            set_selftest_mutation(v_mutate);
            VerifyReport rep = sweep(grid);
            std::string payload = rep.to_json().dump(2);
            if (v_out.empty()) {
                std::cout << payload << "\n";
            } else {
                std::ofstream out(v_out, std::ios::binary);
                if (!out) {
                    std::cerr << "error: cannot write " << v_out << "\n";
                    return kExitUsage;
                }
                out << payload << "\n";
            }
            std::cerr << "checked " << rep.points_checked << " points in " << rep.wall_seconds << " s; "
                      << rep.discrepancies.size() << " discrepancies, " << rep.uncovered_branches().size()
                      << " uncovered branches\n";
            if (!rep.discrepancies.empty()) {
                std::cerr << "verification FAILED: exact mismatches recorded in the report\n";
                return kExitMismatch;
            }
            if (!rep.uncovered_branches().empty()) {
                std::cerr << "verification FAILED: branches never exercised:";
                for (const auto& u : rep.uncovered_branches()) std::cerr << " " << u;
                std::cerr << "\n";
                return kExitMismatch;
            }
            return kExitOk;
        }
    } catch (const EvenEOverDError& e) {
        std::cerr << "error: " << e.what() << "\n"
                  << "closed forms require e/gcd(alpha,e) odd; enumeration is still available via --mode oracle\n";
        return kExitUsage;
    } catch (const CoulterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
