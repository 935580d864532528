#include "coulter/field.hpp"

#include <algorithm>
#include <cassert>

#include "coulter/errors.hpp"

namespace coulter {

namespace {

// Dense polynomials over F_p, constant term first, no trailing-zero
// guarantees except where noted.
using Poly = std::vector<i64>;

void trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly f, const Poly& m, i64 p) {
    const int dm = static_cast<int>(m.size()) - 1;
    trim(f);
    while (static_cast<int>(f.size()) - 1 >= dm) {
        const int df = static_cast<int>(f.size()) - 1;
        i64 lead = f.back();  // m is monic, no inverse needed
        for (int i = 0; i <= dm; ++i) {
            i64& c = f[df - dm + i];
            c = normalize_mod(c - lead * m[i], p);
        }
        trim(f);
    }
    return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, i64 p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        }
    }
    return poly_mod(std::move(prod), m, p);
}

Poly poly_powmod(Poly base, u64 exp, const Poly& m, i64 p) {
    Poly result{1};
    base = poly_mod(std::move(base), m, p);
    while (exp > 0) {
        if (exp & 1) result = poly_mulmod(result, base, m, p);
        base = poly_mulmod(base, base, m, p);
        exp >>= 1;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, i64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b with b made monic first
        i64 lead_inv = mod_inv(b.back(), p);
        for (auto& c : b) c = normalize_mod(c * lead_inv, p);
        Poly r = poly_mod(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// No irreducible factor of degree k divides m(x) iff
// gcd(x^{p^k} - x, m) = 1; any reducible degree-e polynomial has a factor
// of degree <= e/2, so checking k = 1..e/2 decides irreducibility.
bool is_irreducible(const Poly& m, i64 p, int e) {
    if (e == 1) return true;
    Poly xp{0, 1};  // running x^{p^k} mod m
    for (int k = 1; k <= e / 2; ++k) {
        xp = poly_powmod(xp, static_cast<u64>(p), m, p);
        Poly diff = xp;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = normalize_mod(diff[1] - 1, p);
        Poly g = poly_gcd(diff, m, p);
        if (static_cast<int>(g.size()) - 1 >= 1) return false;
    }
    return true;
}

}  // namespace

FieldCtx FieldCtx::build(i64 p, int e) {
    if (p < 2 || !is_prime(static_cast<u64>(p))) throw NotPrimeError("build_field: p must be prime, got " + std::to_string(p));
    if (p % 2 == 0) throw EvenPrimeError("build_field: p must be odd");
    if (p > (i64(1) << 20)) throw CoulterError("build_field: p above the 2^20 ceiling");
    if (e < 1) throw DegreeZeroError("build_field: e must be >= 1");

    FieldCtx ctx;
    ctx.p_ = p;
    ctx.e_ = e;
    ctx.q_ = checked_pow_i64(p, e);
    ctx.id_ = static_cast<std::uint32_t>((p << 6) | e);

    // Lexicographically smallest monic irreducible: enumerate the e low
    // coefficients as a base-p counter, constant term least significant.
    {
        std::vector<i64> low(e, 0);
        for (;;) {
            Poly m(low.begin(), low.end());
            m.push_back(1);
            if (is_irreducible(m, p, e)) {
                ctx.modulus_ = std::move(m);
                break;
            }
            int i = 0;
            while (i < e && low[i] == p - 1) low[i++] = 0;
            if (i == e) throw CoulterError("build_field: no irreducible polynomial found");
            ++low[i];
        }
    }

    // Frobenius matrix: column j = (x^j)^p mod modulus.
    ctx.frob_matrix_.assign(e, std::vector<i64>(e, 0));
    for (int j = 0; j < e; ++j) {
        Poly xj(static_cast<size_t>(j) + 1, 0);
        xj[j] = 1;
        Poly im = poly_powmod(xj, static_cast<u64>(p), ctx.modulus_, p);
        for (size_t i = 0; i < im.size(); ++i) ctx.frob_matrix_[j][static_cast<int>(i)] = im[i];
    }

    // Trace of each basis element: sum of its Frobenius orbit. The result
    // must be a constant polynomial (it lies in F_p); anything else means
    // the modulus or Frobenius data is corrupt.
    ctx.trace_basis_.assign(e, 0);
    for (int j = 0; j < e; ++j) {
        std::vector<i64> acc(e, 0);
        std::vector<i64> cur(e, 0);
        cur[j] = 1;
        for (int k = 0; k < e; ++k) {
            for (int i = 0; i < e; ++i) acc[i] = normalize_mod(acc[i] + cur[i], p);
            if (k + 1 < e) {
                std::vector<i64> next(e, 0);
                for (int jj = 0; jj < e; ++jj) {
                    if (cur[jj] == 0) continue;
                    for (int i = 0; i < e; ++i) {
                        next[i] = normalize_mod(next[i] + cur[jj] * ctx.frob_matrix_[jj][i], p);
                    }
                }
                cur = std::move(next);
            }
        }
        for (int i = 1; i < e; ++i) {
            if (acc[i] != 0) throw CoulterError("build_field: trace of basis element not in F_p");
        }
        ctx.trace_basis_[j] = acc[0];
    }
    if (ctx.trace_basis_[0] != normalize_mod(e, p)) {
        throw CoulterError("build_field: Tr(1) != e mod p");
    }

    // Primitive element: smallest encoding whose order is q-1, verified
    // against every prime divisor of q-1.
    {
        std::vector<u64> rs = prime_factors(static_cast<u64>(ctx.q_ - 1));
        for (i64 enc = 2; enc < ctx.q_; ++enc) {
            FqElem cand = ctx.from_encoding(enc);
            bool full = true;
            for (u64 r : rs) {
                FqElem t = ctx.pow(cand, static_cast<u64>(ctx.q_ - 1) / r);
                if (t == ctx.one()) {
                    full = false;
                    break;
                }
            }
            if (full) {
                ctx.theta_ = cand;
                break;
            }
        }
        if (ctx.theta_.coeffs.empty()) throw CoulterError("build_field: no primitive element found");
    }

    return ctx;
}

void FieldCtx::check_ctx(const FqElem& a) const {
    if (a.ctx_id != id_ || static_cast<int>(a.coeffs.size()) != e_) {
        throw CtxMismatchError("element does not belong to this field context");
    }
}

FqElem FieldCtx::zero() const { return FqElem{std::vector<i64>(e_, 0), id_}; }

FqElem FieldCtx::one() const {
    FqElem r = zero();
    r.coeffs[0] = 1;
    return r;
}

FqElem FieldCtx::from_coeffs(std::vector<i64> coeffs) const {
    if (static_cast<int>(coeffs.size()) != e_) throw CoulterError("from_coeffs: expected " + std::to_string(e_) + " coefficients");
    for (auto& c : coeffs) c = normalize_mod(c, p_);
    return FqElem{std::move(coeffs), id_};
}

FqElem FieldCtx::from_encoding(i64 enc) const {
    if (enc < 0 || enc >= q_) throw CoulterError("from_encoding: encoding out of range");
    FqElem r = zero();
    for (int i = 0; i < e_; ++i) {
        r.coeffs[i] = enc % p_;
        enc /= p_;
    }
    return r;
}

i64 FieldCtx::encoding(const FqElem& a) const {
    check_ctx(a);
    i64 enc = 0;
    for (int i = e_ - 1; i >= 0; --i) enc = enc * p_ + a.coeffs[i];
    return enc;
}

bool FieldCtx::is_zero(const FqElem& a) const {
    check_ctx(a);
    return std::all_of(a.coeffs.begin(), a.coeffs.end(), [](i64 c) { return c == 0; });
}

FqElem FieldCtx::add(const FqElem& a, const FqElem& b) const {
    check_ctx(a);
    check_ctx(b);
    FqElem r = a;
    for (int i = 0; i < e_; ++i) r.coeffs[i] = normalize_mod(r.coeffs[i] + b.coeffs[i], p_);
    return r;
}

FqElem FieldCtx::sub(const FqElem& a, const FqElem& b) const { return add(a, neg(b)); }

FqElem FieldCtx::neg(const FqElem& a) const {
    check_ctx(a);
    FqElem r = a;
    for (int i = 0; i < e_; ++i) r.coeffs[i] = normalize_mod(-r.coeffs[i], p_);
    return r;
}

FqElem FieldCtx::mul(const FqElem& a, const FqElem& b) const {
    check_ctx(a);
    check_ctx(b);
    std::vector<i64> prod(2 * e_ - 1, 0);
    for (int i = 0; i < e_; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; j < e_; ++j) {
            prod[i + j] = (prod[i + j] + a.coeffs[i] * b.coeffs[j]) % p_;
        }
    }
    Poly red = poly_mod(std::move(prod), modulus_, p_);
    red.resize(e_, 0);
    return FqElem{std::move(red), id_};
}

FqElem FieldCtx::inv(const FqElem& a) const {
    if (is_zero(a)) throw DivisionByZeroError("inv: zero element");
    return pow(a, static_cast<u64>(q_ - 2));
}

FqElem FieldCtx::pow(const FqElem& a, u64 exp) const {
    check_ctx(a);
    FqElem result = one();
    FqElem base = a;
    while (exp > 0) {
        if (exp & 1) result = mul(result, base);
        base = mul(base, base);
        exp >>= 1;
    }
    return result;
}

FqElem FieldCtx::frobenius(const FqElem& a, int k) const {
    check_ctx(a);
    k %= e_;
    if (k < 0) k += e_;
    FqElem cur = a;
    for (int step = 0; step < k; ++step) {
        std::vector<i64> next(e_, 0);
        for (int j = 0; j < e_; ++j) {
            if (cur.coeffs[j] == 0) continue;
            for (int i = 0; i < e_; ++i) {
                next[i] = normalize_mod(next[i] + cur.coeffs[j] * frob_matrix_[j][i], p_);
            }
        }
        cur.coeffs = std::move(next);
    }
    return cur;
}

i64 FieldCtx::trace(const FqElem& a) const {
    check_ctx(a);
    i64 t = 0;
    for (int i = 0; i < e_; ++i) t = (t + a.coeffs[i] * trace_basis_[i]) % p_;
    return t;
}

int FieldCtx::quad_char(const FqElem& a) const {
    if (is_zero(a)) return 0;
    FqElem r = pow(a, static_cast<u64>((q_ - 1) / 2));
    return r == one() ? 1 : -1;
}

FqElem FieldCtx::embed_prime(i64 y) const {
    FqElem r = zero();
    r.coeffs[0] = normalize_mod(y, p_);
    return r;
}

FqElem FieldCtx::power_map(const FqElem& a, int alpha) const {
    return mul(a, frobenius(a, alpha));
}

}  // namespace coulter
