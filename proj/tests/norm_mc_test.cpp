#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "pairsec/norm_mc.hpp"

using namespace pairsec;

namespace {

UniPoly random_sieve_poly(std::mt19937_64& rng, int eta, long A) {
    std::uniform_int_distribution<long> d(-A, A);
    std::vector<Integer> c(eta);
    for (auto& x : c) x = d(rng);
    return UniPoly(std::move(c));
}

}  // namespace

TEST_CASE("CRT route matches the exact resultant route") {
    std::mt19937_64 rng(5);
    for (const char* name : {"BN256", "BLS12-381", "KSS18-508", "BLS24-479"}) {
        CAPTURE(name);
        TnfsSetup s = build_setup(Registry::builtin().curve(name));
        int checked = 0;
        while (checked < 8) {
            UniPoly a = random_sieve_poly(rng, s.eta, 20);
            UniPoly b = random_sieve_poly(rng, s.eta, 20);
            if (a.is_zero() || b.is_zero()) continue;
            for (const BiPoly* f : {&s.f1, &s.f2}) {
                Integer ref = sample_norm_reference(*f, s.h, a, b);
                Integer crt = sample_norm_crt(*f, s.h, a, b);
                CHECK(abs(ref) == crt);
            }
            ++checked;
        }
    }
}

TEST_CASE("estimate_norms determinism") {
    TnfsSetup s = build_setup(Registry::builtin().curve("BN256"));
    NormEstimate a = estimate_norms(s, 100, 64, 9);
    NormEstimate b = estimate_norms(s, 100, 64, 9);
    CHECK(a.log2_n1 == b.log2_n1);
    CHECK(a.log2_n2 == b.log2_n2);
    NormEstimate c = estimate_norms(s, 100, 64, 10);
    CHECK(a.log2_n1 != c.log2_n1);
    CHECK(a.A == 100);
    CHECK(a.samples == 64);
}

TEST_CASE("norms grow with A") {
    TnfsSetup s = build_setup(Registry::builtin().curve("BN256"));
    NormEstimate lo = estimate_norms(s, 50, 256, 1);
    NormEstimate hi = estimate_norms(s, 400, 256, 1);
    CHECK(hi.log2_n1 > lo.log2_n1 + 40);
    CHECK(hi.log2_n2 > lo.log2_n2 + 10);
}

TEST_CASE("BN256 published norms at the published A") {
    TnfsSetup s = build_setup(Registry::builtin().curve("BN256"));
    NormEstimate e = estimate_norms(s, 176, 4000, 1);
    CHECK(e.log2_n1 == doctest::Approx(424.80).epsilon(0.005));
    CHECK(e.log2_n2 == doctest::Approx(466.51).epsilon(0.005));
}

TEST_CASE("input validation") {
    TnfsSetup s = build_setup(Registry::builtin().curve("BN256"));
    CHECK_THROWS_AS(estimate_norms(s, 0, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(estimate_norms(s, 10, 0, 1), std::invalid_argument);
}
