#include "coulter/cyclotomic.hpp"

#include <sstream>

#include "coulter/errors.hpp"

namespace coulter {

namespace {

constexpr i64 kCoeffBound = i64(1) << 62;

i64 checked_add(i64 a, i64 b) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r) || r >= kCoeffBound || r <= -kCoeffBound) {
        throw OverflowError("CycInt: coefficient bound exceeded");
    }
    return r;
}

i64 checked_mul(i64 a, i64 b) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r) || r >= kCoeffBound || r <= -kCoeffBound) {
        throw OverflowError("CycInt: coefficient bound exceeded");
    }
    return r;
}

}  // namespace

CycInt::CycInt(i64 p) : p_(p), c_(static_cast<size_t>(p - 1), 0) {
    if (p < 3) throw PrimeMismatchError("CycInt: p must be an odd prime >= 3");
}

CycInt CycInt::integer(i64 p, i64 n) {
    CycInt r(p);
    r.c_[0] = n;
    return r;
}

CycInt CycInt::zeta_pow(i64 p, i64 k) {
    if (k < 0 || k >= p) throw CoulterError("zeta_pow: exponent out of range");
    CycInt r(p);
    if (k < p - 1) {
        r.c_[static_cast<size_t>(k)] = 1;
    } else {
        // zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
        for (auto& c : r.c_) c = -1;
    }
    return r;
}

CycInt CycInt::from_zeta_buckets(i64 p, std::span<const i64> buckets) {
    if (static_cast<i64>(buckets.size()) != p) throw CoulterError("from_zeta_buckets: need exactly p buckets");
    CycInt r(p);
    const i64 top = buckets[static_cast<size_t>(p - 1)];
    for (i64 k = 0; k < p - 1; ++k) {
        r.c_[static_cast<size_t>(k)] = checked_add(buckets[static_cast<size_t>(k)], -top);
    }
    return r;
}

void CycInt::check_same_p(const CycInt& o) const {
    if (p_ != o.p_) throw PrimeMismatchError("CycInt: mixed primes");
}

CycInt CycInt::operator+(const CycInt& o) const {
    check_same_p(o);
    CycInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_add(c_[i], o.c_[i]);
    return r;
}

CycInt CycInt::operator-(const CycInt& o) const { return *this + (-o); }

CycInt CycInt::operator-() const {
    CycInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
    check_same_p(o);
    // Accumulate into exponent classes mod p, then fold zeta^{p-1}.
    std::vector<i64> ext(static_cast<size_t>(p_), 0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j] == 0) continue;
            size_t k = (i + j) % static_cast<size_t>(p_);
            ext[k] = checked_add(ext[k], checked_mul(c_[i], o.c_[j]));
        }
    }
    return from_zeta_buckets(p_, ext);
}

CycInt CycInt::scaled(i64 n) const {
    CycInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_mul(c_[i], n);
    return r;
}

CycInt CycInt::conj() const {
    std::vector<i64> ext(static_cast<size_t>(p_), 0);
    ext[0] = c_[0];
    for (i64 k = 1; k < p_ - 1; ++k) {
        ext[static_cast<size_t>(p_ - k)] = c_[static_cast<size_t>(k)];
    }
    return from_zeta_buckets(p_, ext);
}

std::optional<i64> CycInt::as_integer() const {
    for (size_t i = 1; i < c_.size(); ++i) {
        if (c_[i] != 0) return std::nullopt;
    }
    return c_[0];
}

bool CycInt::is_zero() const {
    for (i64 c : c_) {
        if (c != 0) return false;
    }
    return true;
}

bool CycInt::operator==(const CycInt& o) const { return p_ == o.p_ && c_ == o.c_; }

std::string CycInt::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ",";
        os << c_[i];
    }
    os << "]@p=" << p_;
    return os.str();
}

GaussSumSymbolic gauss_sum_prime(i64 p) {
    std::vector<i64> buckets(static_cast<size_t>(p), 0);
    for (i64 t = 1; t < p; ++t) buckets[static_cast<size_t>(t)] = legendre(t, p);
    return GaussSumSymbolic{p, CycInt::from_zeta_buckets(p, buckets)};
}

}  // namespace coulter
