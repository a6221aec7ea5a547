#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pairsec/modarith.hpp"

using namespace pairsec;

namespace {

Integer to_mpz(uint64_t v) {
    Integer z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return z;
}

}  // namespace

TEST_CASE("MontPrime constants") {
    for (uint64_t p : {uint64_t(7), uint64_t(101), crt_primes(1)[0]}) {
        MontPrime mp(p);
        CHECK(mp.from_mont(mp.one) == 1);
        CHECK(to_mpz(mp.one) == (Integer(1) << 64) % to_mpz(p));
        CHECK(to_mpz(mp.r2) == (Integer(1) << 127) * 2 % to_mpz(p));
        // pinv * p = -1 mod 2^64
        CHECK(uint64_t(mp.pinv * p) == ~uint64_t(0));
    }
}

TEST_CASE("MontPrime arithmetic vs gmp") {
    const uint64_t p = crt_primes(1)[0];
    MontPrime mp(p);
    Integer P = to_mpz(p);
    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
        uint64_t a = rng() % p, b = rng() % p;
        uint64_t am = mp.to_mont(a), bm = mp.to_mont(b);
        CHECK(mp.from_mont(am) == a);
        Integer prod = to_mpz(a) * to_mpz(b) % P;
        CHECK(to_mpz(mp.from_mont(mp.mul(am, bm))) == prod);
        Integer sum = (to_mpz(a) + to_mpz(b)) % P;
        CHECK(to_mpz(mp.from_mont(mp.add(am, bm))) == sum);
        if (a) {
            uint64_t inv = mp.inv(am);
            CHECK(mp.from_mont(mp.mul(am, inv)) == 1);
        }
        uint64_t e = rng() % 1000;
        Integer pw;
        mpz_powm_ui(pw.get_mpz_t(), to_mpz(a).get_mpz_t(), e, P.get_mpz_t());
        CHECK(to_mpz(mp.from_mont(mp.pow(am, e))) == pw);
    }
}

TEST_CASE("crt_primes") {
    const auto& ps = crt_primes(10);
    CHECK(ps.size() >= 10);
    for (size_t i = 0; i < 10; ++i) {
        Integer z = to_mpz(ps[i]);
        CHECK(mpz_probab_prime_p(z.get_mpz_t(), 32) != 0);
        CHECK(z < (Integer(1) << 62));
        CHECK(z > (Integer(1) << 61));
        if (i) CHECK(ps[i] < ps[i - 1]);
    }
    // stable across calls
    CHECK(crt_primes(3)[2] == ps[2]);
}

TEST_CASE("resultant_mod_p vs integer resultant") {
    const uint64_t p = crt_primes(1)[0];
    MontPrime mp(p);
    Integer P = to_mpz(p);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dc(-40, 40);
    std::uniform_int_distribution<int> dd(0, 5);
    int checked = 0;
    for (int it = 0; it < 200; ++it) {
        std::vector<Integer> fc(dd(rng) + 1), gc(dd(rng) + 1);
        for (auto& c : fc) c = dc(rng);
        for (auto& c : gc) c = dc(rng);
        UniPoly f(fc), g(gc);
        if (f.is_zero() || g.is_zero()) continue;
        if (f.degree() < 1 && g.degree() < 1) continue;
        Integer want = resultant_uni(f, g) % P;
        if (want < 0) want += P;
        auto lift = [&](const UniPoly& u) {
            MPolyVec v;
            for (const auto& c : u.coeffs()) {
                Integer r = c % P;
                if (r < 0) r += P;
                v.push_back(mp.to_mont(mpz_get_ui(r.get_mpz_t())));
            }
            return v;
        };
        CHECK(to_mpz(resultant_mod_p(lift(f), lift(g), mp)) == want);
        ++checked;
    }
    CHECK(checked > 150);
}

TEST_CASE("CrtReconstructor roundtrip") {
    const auto& pool = crt_primes(6);
    std::vector<uint64_t> ps(pool.begin(), pool.begin() + 6);
    CrtReconstructor rec(ps);
    Integer M = 1;
    for (uint64_t p : ps) M *= to_mpz(p);
    std::mt19937_64 rng(17);
    for (int it = 0; it < 50; ++it) {
        // random signed value in (-M/2, M/2]
        Integer v = 0;
        for (int i = 0; i < 5; ++i) v = (v << 64) + to_mpz(rng());
        v %= M;
        if (v > M / 2) v -= M;
        std::vector<uint64_t> res;
        for (uint64_t p : ps) {
            Integer r = v % to_mpz(p);
            if (r < 0) r += to_mpz(p);
            res.push_back(mpz_get_ui(r.get_mpz_t()));
        }
        CHECK(rec.reconstruct(res) == v);
    }
    // explicit small cases
    CrtReconstructor small(std::vector<uint64_t>(pool.begin(), pool.begin() + 2));
    CHECK(small.reconstruct({5, 5}) == 5);
    std::vector<uint64_t> neg = {pool[0] - 3, pool[1] - 3};
    CHECK(small.reconstruct(neg) == -3);
    CHECK_THROWS_AS(CrtReconstructor(std::vector<uint64_t>{}), std::invalid_argument);
}
