#include "pairsec/norm_mc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pairsec/modarith.hpp"

namespace pairsec {

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// counter-based stream: sample i, redraw attempt k get independent streams
struct Stream {
    uint64_t key;
    uint64_t ctr = 0;
    Stream(uint64_t seed, uint64_t sample, uint64_t attempt)
        : key(splitmix64(splitmix64(seed) ^ 0x6a09e667f3bcc909ull * sample ^
                         0xbb67ae8584caa73bull * attempt)) {}
    uint64_t next() { return splitmix64(key + ctr++); }
    // uniform on [0, m] by rejection
    uint64_t uniform(uint64_t m) {
        uint64_t range = m + 1;
        uint64_t lim = UINT64_MAX - UINT64_MAX % range;
        uint64_t v;
        do v = next();
        while (v >= lim);
        return v % range;
    }
    // uniform on [-A, A]
    long symmetric(long A) { return static_cast<long>(uniform(2 * A)) - A; }
};

// Res_x(a(t) - x*b(t), f) = +- sum_j f_j(t) * a^j * b^(n-j), n = deg_x f.
// Computed by Horner so only running products appear.
UniPoly eliminate_x(const BiPoly& f, const UniPoly& a, const UniPoly& b) {
    auto fc = f.coeffs_x();
    int n = static_cast<int>(fc.size()) - 1;
    UniPoly acc = fc[n];
    UniPoly bp{{1}};
    for (int j = n - 1; j >= 0; --j) {
        bp = bp * b;
        acc = acc * a + fc[j] * bp;
    }
    return acc;
}

// ---- modular route ----------------------------------------------------------

// F_p[t]/(h) with h monic, coefficients in {-1,0,1}; Montgomery form values.
struct QuotRing {
    const MontPrime& mp;
    int eta;
    std::vector<int> hlow;  // h_j for j < eta

    QuotRing(const MontPrime& m, const UniPoly& h)
        : mp(m), eta(h.degree()), hlow(eta) {
        for (int j = 0; j < eta; ++j) hlow[j] = static_cast<int>(h.coeff(j).get_si());
    }

    // c * t^eta folded into lower coefficients: t^eta = -sum h_j t^j
    void fold(MPolyVec& v, size_t i, uint64_t c) const {
        for (int j = 0; j < eta; ++j) {
            if (hlow[j] == 1)
                v[i - eta + j] = mp.sub(v[i - eta + j], c);
            else if (hlow[j] == -1)
                v[i - eta + j] = mp.add(v[i - eta + j], c);
        }
    }

    MPolyVec mul(const MPolyVec& a, const MPolyVec& b) const {
        if (a.empty() || b.empty()) return {};
        MPolyVec v(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (!a[i]) continue;
            for (size_t j = 0; j < b.size(); ++j)
                v[i + j] = mp.add(v[i + j], mp.mul(a[i], b[j]));
        }
        for (size_t i = v.size(); i-- > static_cast<size_t>(eta);) {
            if (v[i]) fold(v, i, v[i]);
            v.pop_back();
        }
        while (!v.empty() && v.back() == 0) v.pop_back();
        return v;
    }

    MPolyVec add(MPolyVec a, const MPolyVec& b) const {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        for (size_t i = 0; i < b.size(); ++i) a[i] = mp.add(a[i], b[i]);
        while (!a.empty() && a.back() == 0) a.pop_back();
        return a;
    }
};

MPolyVec to_ring(const UniPoly& f, const QuotRing& q) {
    MPolyVec v;
    if (f.is_zero()) return v;
    Integer m{static_cast<unsigned long>(q.mp.p)};
    for (const auto& c : f.coeffs()) {
        Integer r = c % m;
        if (r < 0) r += m;
        v.push_back(q.mp.to_mont(r.get_ui()));
    }
    // f may exceed deg eta (e.g. f_j of f1 for kappa=2); fold high terms
    for (size_t i = v.size(); i-- > static_cast<size_t>(q.eta);) {
        if (v[i]) q.fold(v, i, v[i]);
        v.pop_back();
    }
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

// residue of |Res_t(eliminate_x(f,a,b), h)| mod q.mp.p, via reduction mod h
// first: Res(h, G) = Res(h, G mod h) because h is monic.
uint64_t norm_residue(const std::vector<UniPoly>& fc, const UniPoly& h,
                      const UniPoly& a, const UniPoly& b, const QuotRing& q) {
    int n = static_cast<int>(fc.size()) - 1;
    MPolyVec am = to_ring(a, q), bm = to_ring(b, q);
    MPolyVec acc = to_ring(fc[n], q);
    MPolyVec bp = {q.mp.one};
    for (int j = n - 1; j >= 0; --j) {
        bp = q.mul(bp, bm);
        acc = q.add(q.mul(acc, am), q.mul(to_ring(fc[j], q), bp));
    }
    MPolyVec hm;
    for (const auto& c : h.coeffs()) {
        long v = c.get_si();
        hm.push_back(v == 0 ? 0 : q.mp.to_mont(v > 0 ? 1 : q.mp.p - 1));
    }
    return resultant_mod_p(hm, acc, q.mp);
}

// upper bound (bits) on |Res_t(G, h)| with G = eliminate_x(f,a,b), coeffs of
// a, b bounded by A; Hadamard on the Sylvester matrix with inflated norms
double norm_bound_bits(const BiPoly& f, const UniPoly& h, long A) {
    int eta = h.degree();
    int n = f.deg_x();
    int dt = std::max(f.deg_t(), 0);
    double fmax = 0;
    for (const auto& [k, v] : f.terms()) fmax = std::max(fmax, log2_abs(v));
    double g_inf = n * std::log2(static_cast<double>(std::max(A, 2L))) +
                   (n > 1 ? (n - 1) * std::log2(static_cast<double>(eta)) : 0) +
                   fmax + std::log2(dt + 1.0) + std::log2(n + 1.0);
    int dg = n * (eta - 1) + dt;
    return eta * (0.5 * std::log2(dg + 1.0) + g_inf) +
           dg * 0.5 * std::log2(eta + 1.0);
}

Integer crt_norm(const std::vector<UniPoly>& fc, const UniPoly& h, const UniPoly& a,
                 const UniPoly& b, const std::vector<uint64_t>& primes,
                 const CrtReconstructor& rec) {
    std::vector<uint64_t> res(primes.size());
    for (size_t i = 0; i < primes.size(); ++i) {
        MontPrime mp(primes[i]);
        QuotRing q(mp, h);
        res[i] = norm_residue(fc, h, a, b, q);
    }
    return abs(rec.reconstruct(res));
}

UniPoly draw_poly(Stream& st, int eta, long A, bool half_first) {
    std::vector<Integer> c(eta);
    bool nonzero = false;
    for (int i = 0; i < eta; ++i) {
        long v = (i == 0 && half_first) ? static_cast<long>(st.uniform(A))
                                        : st.symmetric(A);
        c[i] = v;
        nonzero |= v != 0;
    }
    if (!nonzero) return UniPoly{};  // caller redraws
    return UniPoly{std::move(c)};
}

}  // namespace

Integer sample_norm_reference(const BiPoly& f, const UniPoly& h, const UniPoly& a,
                              const UniPoly& b) {
    BiPoly phi = BiPoly::from_t(a) + BiPoly::var_x() * BiPoly::from_t(b) * Integer(-1);
    UniPoly g = resultant_x(phi, f);
    if (g.is_zero()) return 0;
    return abs(resultant_uni(g, h));
}

Integer sample_norm_crt(const BiPoly& f, const UniPoly& h, const UniPoly& a,
                        const UniPoly& b) {
    long A = 1;
    for (const auto& c : a.coeffs()) A = std::max(A, std::labs(c.get_si()));
    for (const auto& c : b.coeffs()) A = std::max(A, std::labs(c.get_si()));
    size_t count = static_cast<size_t>(norm_bound_bits(f, h, A) / 61.0) + 2;
    const auto& primes = crt_primes(count);
    CrtReconstructor rec(std::vector<uint64_t>(primes.begin(), primes.begin() + count));
    return crt_norm(f.coeffs_x(), h, a, b,
                    {primes.begin(), primes.begin() + count}, rec);
}

NormEstimate estimate_norms(const TnfsSetup& s, long A, long samples, uint64_t seed) {
    if (A < 1 || samples < 1) throw std::invalid_argument("estimate_norms: bad A or samples");
    int eta = s.eta;
    auto f1c = s.f1.coeffs_x();
    auto f2c = s.f2.coeffs_x();

    size_t n1 = static_cast<size_t>(norm_bound_bits(s.f1, s.h, A) / 61.0) + 2;
    size_t n2 = static_cast<size_t>(norm_bound_bits(s.f2, s.h, A) / 61.0) + 2;
    size_t count = std::max(n1, n2);
    const auto& pool = crt_primes(count);
    std::vector<uint64_t> p1(pool.begin(), pool.begin() + n1);
    std::vector<uint64_t> p2(pool.begin(), pool.begin() + n2);
    CrtReconstructor r1(p1), r2(p2);

    double sum1 = 0, sum2 = 0;
    for (long i = 0; i < samples; ++i) {
        for (uint64_t attempt = 0;; ++attempt) {
            Stream st(seed, static_cast<uint64_t>(i), attempt);
            UniPoly a = draw_poly(st, eta, A, true);
            UniPoly b = draw_poly(st, eta, A, false);
            if (a.is_zero() || b.is_zero()) continue;
            Integer v1 = crt_norm(f1c, s.h, a, b, p1, r1);
            Integer v2 = crt_norm(f2c, s.h, a, b, p2, r2);
            if (v1 == 0 || v2 == 0) continue;  // (a,b) hits a common factor
            sum1 += log2_abs(v1);
            sum2 += log2_abs(v2);
            break;
        }
    }
    NormEstimate e;
    e.A = A;
    e.samples = samples;
    e.seed = seed;
    e.log2_n1 = sum1 / static_cast<double>(samples);
    e.log2_n2 = sum2 / static_cast<double>(samples);
    return e;
}

}  // namespace pairsec
