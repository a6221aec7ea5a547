#include "pairsec/modarith.hpp"

#include <mutex>
#include <stdexcept>

namespace pairsec {

MontPrime::MontPrime(uint64_t prime) : p(prime) {
    // pinv = -p^-1 mod 2^64 by Newton iteration
    uint64_t inv = p;
    for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
    pinv = ~inv + 1;  // -inv
    // one = 2^64 mod p, r2 = 2^128 mod p
    one = (~uint64_t(0)) % p + 1;
    if (one == p) one = 0;
    unsigned __int128 sq = static_cast<unsigned __int128>(one) * one % p;
    r2 = static_cast<uint64_t>(sq);
}

uint64_t MontPrime::pow(uint64_t base, uint64_t e) const {
    uint64_t result = one;
    while (e) {
        if (e & 1) result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

namespace {

bool is_prime_u64(uint64_t n) {
    Integer z(0);
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(n), 0, 0, &n);
    return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

}  // namespace

const std::vector<uint64_t>& crt_primes(size_t count) {
    static std::vector<uint64_t> primes;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    uint64_t cand = primes.empty() ? ((uint64_t(1) << 62) - 1) : primes.back() - 2;
    while (primes.size() < count) {
        while (!is_prime_u64(cand)) cand -= 2;
        primes.push_back(cand);
        cand -= 2;
    }
    return primes;
}

uint64_t resultant_mod_p(MPolyVec a, MPolyVec b, const MontPrime& mp) {
    auto trim = [](MPolyVec& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    if (a.empty() || b.empty()) return 0;
    uint64_t res = mp.one;  // Montgomery accumulator
    bool negate = false;
    while (b.size() > 1) {
        const int da = static_cast<int>(a.size()) - 1;
        const int db = static_cast<int>(b.size()) - 1;
        if (da < db) {
            if ((da & 1) && (db & 1)) negate = !negate;
            std::swap(a, b);
            continue;
        }
        // a mod b (monic division by scaling with lc(b)^-1)
        const uint64_t lcb = b.back();
        const uint64_t lcb_inv = mp.inv(lcb);
        MPolyVec r = a;
        for (int i = da; i >= db; --i) {
            uint64_t c = mp.mul(r[i], lcb_inv);
            if (c) {
                for (int j = 0; j < db; ++j)
                    r[i - db + j] = mp.sub(r[i - db + j], mp.mul(c, b[j]));
            }
            r[i] = 0;
        }
        trim(r);
        const int dr = r.empty() ? -1 : static_cast<int>(r.size()) - 1;
        if (dr < 0) return 0;  // common factor
        // res *= lc(b)^(da - dr), sign flip (-1)^(da*db)
        uint64_t lcpow = mp.pow(lcb, static_cast<uint64_t>(da - dr));
        res = mp.mul(res, lcpow);
        if ((da & 1) && (db & 1)) negate = !negate;
        a = std::move(b);
        b = std::move(r);
    }
    // b is a nonzero constant: res *= b^deg(a)
    res = mp.mul(res, mp.pow(b[0], static_cast<uint64_t>(a.size()) - 1));
    uint64_t out = mp.from_mont(res);
    if (negate && out) out = mp.p - out;
    return out;
}

CrtReconstructor::CrtReconstructor(const std::vector<uint64_t>& primes) : primes_(primes) {
    if (primes.empty()) throw std::invalid_argument("CrtReconstructor: no primes");
    prefix_.resize(primes.size());
    prefinv_.resize(primes.size());
    Integer acc(1);
    for (size_t i = 0; i < primes.size(); ++i) {
        prefix_[i] = acc;
        if (i > 0) {
            MontPrime mp(primes[i]);
            Integer red = acc % Integer(primes[i]);
            uint64_t r = red.get_ui();
            prefinv_[i] = mp.from_mont(mp.inv(mp.to_mont(r)));
        }
        acc *= Integer(primes[i]);
    }
    modulus_ = acc;
    half_ = modulus_ / 2;
}

Integer CrtReconstructor::reconstruct(const std::vector<uint64_t>& residues) const {
    // Garner: x = x0 + p0*(c1 + p1*(c2 + ...)) built incrementally
    Integer x(0);
    for (size_t i = 0; i < primes_.size(); ++i) {
        const MontPrime mp(primes_[i]);
        Integer xi = x % Integer(primes_[i]);
        uint64_t cur = xi.get_ui();
        uint64_t need = residues[i] >= cur ? residues[i] - cur : residues[i] + primes_[i] - cur;
        if (i == 0) {
            x = Integer(need);
        } else {
            uint64_t c = mp.mul(mp.to_mont(need), mp.to_mont(prefinv_[i]));
            c = mp.from_mont(c);
            x += prefix_[i] * Integer(c);
        }
    }
    if (x > half_) x -= modulus_;
    return x;
}

}  // namespace pairsec
