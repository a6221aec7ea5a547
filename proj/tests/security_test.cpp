#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "pairsec/security.hpp"

using namespace pairsec;

namespace {

SecurityOptions quick_opts() {
    SecurityOptions o;
    o.grid.samples = 640;
    o.grid.locate_samples = 128;
    return o;
}

}  // namespace

TEST_CASE("curve side bits") {
    // sqrt(pi r / 4): r = 4 gives log2(sqrt(pi)) = 0.8257...
    CHECK(curve_side_bits(Integer(4)) ==
          doctest::Approx(0.5 * std::log2(4.0 * std::atan(1.0))).epsilon(1e-12));
    // the real BN256 group order is a few bits shy of 2^256
    CHECK(curve_side_bits(Registry::builtin().curve("BN256").r) ==
          doctest::Approx(127.58).epsilon(0.0001));
    CHECK(curve_side_bits_from_r_bits(256) == doctest::Approx(127.83).epsilon(0.0001));
    // doubling r_bits adds half a bit per bit
    CHECK(curve_side_bits_from_r_bits(300) - curve_side_bits_from_r_bits(200) ==
          doctest::Approx(50.0));
}

TEST_CASE("profile BN256") {
    SecurityOptions o = quick_opts();
    SecurityProfile p = profile(Registry::builtin().curve("BN256"), o);
    CHECK(p.field_bits == doctest::Approx(100.0).epsilon(0.03));
    CHECK(p.curve_bits == doctest::Approx(127.58).epsilon(0.0001));
    CHECK(p.security_bits == p.field_bits);  // field side binds for BN256
    CHECK(p.field.feasible);
    CHECK(!p.h_irreducible_mod_p);
    CHECK(p.curve.name == "BN256");
}

TEST_CASE("GS model is costlier than BD") {
    SecurityOptions bd = quick_opts();
    SecurityOptions gs = quick_opts();
    gs.model = ModelParams::gs();
    double b = profile(Registry::builtin().curve("BN256"), bd).field_bits;
    double g = profile(Registry::builtin().curve("BN256"), gs).field_bits;
    CHECK(g > b);
    CHECK(g - b < 15.0);
}

TEST_CASE("sweep and csv") {
    SecurityOptions o = quick_opts();
    auto pts = sweep_family("BLS12", 250, 330, 40, o);
    REQUIRE(pts.size() >= 2);
    for (const auto& pt : pts) {
        CHECK(pt.field_bits > 0);
        CHECK(pt.curve_bits > 0);
        CHECK(pt.security_bits == doctest::Approx(std::min(pt.field_bits, pt.curve_bits)));
        CHECK(pt.r_bits > 0);
        CHECK(pt.u != 0);
    }
    CHECK(pts[1].field_bits > pts[0].field_bits);
    std::string csv = sweep_to_csv(pts);
    CHECK(csv.find("p_bits") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == long(pts.size()) + 1);
}

TEST_CASE("crossover for BLS12") {
    SecurityOptions o = quick_opts();
    auto c = find_crossover("BLS12", 240, 520, o);
    REQUIRE(c.has_value());
    CHECK(c->p_bits > 340);
    CHECK(c->p_bits < 380);
    CHECK(c->level == doctest::Approx(121.0).epsilon(0.025));
    // no crossover inside a window where the curve side always binds
    auto none = find_crossover("BLS12", 600, 700, o);
    CHECK(!none.has_value());
}

TEST_CASE("min_p_for_level") {
    SecurityOptions o = quick_opts();
    auto p100 = min_p_for_level("BLS12", 100.0, o);
    auto p120 = min_p_for_level("BLS12", 120.0, o);
    REQUIRE(p100.has_value());
    REQUIRE(p120.has_value());
    CHECK(*p100 < *p120);
    CHECK(*p120 > 330);
    CHECK(*p120 < 400);
    // outlandish level is out of reach within the cap
    CHECK(!min_p_for_level("BLS12", 5000.0, o, 1024).has_value());
}
