#include "coulter/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace coulter {

namespace {

using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((u128(a) * b) % m);
}

// One Miller-Rabin round with witness a.
bool mr_round(u64 n, u64 a, u64 d, int r) {
    u64 x = mod_pow(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < r; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

u64 pollard_rho(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mul_mod(x, x, n) + c) % n;
            y = (mul_mod(y, y, n) + c) % n;
            y = (mul_mod(y, y, n) + c) % n;
            u64 diff = x > y ? x - y : y - x;
            if (diff == 0) break;
            d = std::__gcd(diff, n);
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_rec(u64 n, std::vector<u64>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    u64 d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

u64 mod_pow(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int r = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++r;
    }
    // Sufficient witness set for n < 2^64 (Sinclair).
    for (u64 a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        if (a % n == 0) continue;
        if (!mr_round(n, a, d, r)) return false;
    }
    return true;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    factor_rec(n, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

i64 mod_inv(i64 a, i64 p) {
    a = normalize_mod(a, p);
    if (a == 0) throw std::domain_error("mod_inv: zero has no inverse");
    return static_cast<i64>(mod_pow(static_cast<u64>(a), static_cast<u64>(p - 2), static_cast<u64>(p)));
}

int legendre(i64 a, i64 p) {
    a = normalize_mod(a, p);
    if (a == 0) return 0;
    u64 r = mod_pow(static_cast<u64>(a), static_cast<u64>((p - 1) / 2), static_cast<u64>(p));
    return r == 1 ? 1 : -1;
}

i64 gcd_i64(i64 a, i64 b) {
    while (b != 0) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

i64 checked_pow_i64(i64 p, int e) {
    i64 r = 1;
    const i64 limit = i64(1) << 62;
    for (int i = 0; i < e; ++i) {
        if (r > limit / p) throw std::overflow_error("checked_pow_i64: p^e exceeds 2^62");
        r *= p;
    }
    return r;
}

}  // namespace coulter
