#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "pairsec/pairing_cost.hpp"

using namespace pairsec;

TEST_CASE("base multiplication word model") {
    PairingModel m;
    CHECK(m.base_mult_words(446) == doctest::Approx(49.0));    // ceil(446/64)^2
    CHECK(m.base_mult_words(64) == doctest::Approx(1.0));
    CHECK(m.base_mult_words(65) == doctest::Approx(4.0));
    m.word_exponent = 1.58;
    CHECK(m.base_mult_words(446) == doctest::Approx(std::pow(7.0, 1.58)));
}

TEST_CASE("pairing cost composition") {
    // BN at p_bits=446: u_bits = 446/4, loop length u_bits + log2(6),
    // ext mults = 1.5/loop bit + 3/u bit, 54 base mults each, 7^2 words
    PairingModel m;
    double u_bits = 446.0 / 4.0;
    double loop = u_bits + std::log2(6.0);
    double ext = 1.5 * loop + 3.0 * u_bits;
    double expect = std::log2(ext * 54.0 * 49.0);
    CHECK(pairing_cost("BN", 446, m) == doctest::Approx(expect).epsilon(1e-12));

    // BLS12: plain Miller loop of u_bits, 5 final-exp mults per u bit
    double u12 = 440.0 / 6.0;
    double ext12 = 1.5 * u12 + 5.0 * u12;
    CHECK(pairing_cost("BLS12", 440, m) ==
          doctest::Approx(std::log2(ext12 * 54.0 * 49.0)).epsilon(1e-12));

    CHECK_THROWS(pairing_cost("NOPE", 400, m));
}

TEST_CASE("cost grows with p") {
    PairingModel m;
    for (const char* fam : {"BN", "BLS12", "BLS24", "KSS16", "KSS18"}) {
        CAPTURE(fam);
        CHECK(pairing_cost(fam, 700, m) > pairing_cost(fam, 400, m));
    }
}

TEST_CASE("orderings at the published characteristic sizes") {
    PairingModel m;
    // level 100: BN needs the smallest p and wins
    CHECK(pairing_cost("BN", 270, m) < pairing_cost("BLS12", 310, m));
    // level 192 sizes: BLS24 wins over KSS18 and BLS12
    CHECK(pairing_cost("BLS24", 519, m) < pairing_cost("KSS18", 636, m));
    CHECK(pairing_cost("BLS24", 519, m) < pairing_cost("BLS12", 1190, m));
    // uniform weight scaling preserves differences up to the common shift
    PairingModel scaled = m;
    for (auto& [k, w] : scaled.ext_mult_weight) w *= 16.0;
    double d0 = pairing_cost("BLS24", 519, m) - pairing_cost("KSS18", 636, m);
    double d1 = pairing_cost("BLS24", 519, scaled) - pairing_cost("KSS18", 636, scaled);
    CHECK(d0 == doctest::Approx(d1).epsilon(1e-12));
}
