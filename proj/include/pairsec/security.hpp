#ifndef PAIRSEC_SECURITY_HPP
#define PAIRSEC_SECURITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "pairsec/cost_model.hpp"
#include "pairsec/families.hpp"

namespace pairsec {

// Pollard rho on the r-order subgroup: log2(sqrt(pi*r/4)).
double curve_side_bits(const Integer& r);
double curve_side_bits_from_r_bits(double r_bits);

struct SecurityOptions {
    ModelParams model = ModelParams::bd();
    GridConfig grid;
    uint64_t seed = 1;
    bool strict_setup = false;
};

struct SecurityProfile {
    CurveInstance curve;
    CostPoint field;
    double field_bits = 0;
    double curve_bits = 0;
    double security_bits = 0;  // min of the two sides
    bool h_irreducible_mod_p = false;
    bool extrapolated_recipe = false;
};

SecurityProfile profile(const CurveInstance& curve, const SecurityOptions& opts);

struct SweepPoint {
    int p_bits = 0;
    int r_bits = 0;
    Integer u;
    double field_bits = 0;
    double curve_bits = 0;
    double security_bits = 0;
};

// Field vs curve security as the characteristic grows; one instantiated curve
// (low-weight seed) per step. Points where no seed is found are skipped.
std::vector<SweepPoint> sweep_family(const std::string& family, int p_bits_lo,
                                     int p_bits_hi, int step,
                                     const SecurityOptions& opts);

struct Crossover {
    int p_bits = 0;       // curve side overtakes field side here
    double level = 0;     // security at the crossover
};

// The curve side binds below the crossover and the field side above; found by
// a coarse scan (20-bit spacing) and 5-bit refinement, linear interpolation.
std::optional<Crossover> find_crossover(const std::string& family, int p_bits_lo,
                                        int p_bits_hi, const SecurityOptions& opts);

// Smallest characteristic size reaching the level, by bisection to 2-bit
// granularity; absent when the level is out of reach at p_bits <= p_bits_max.
std::optional<int> min_p_for_level(const std::string& family, double level_bits,
                                   const SecurityOptions& opts, int p_bits_max = 4096);

std::string sweep_to_csv(const std::vector<SweepPoint>& points);

}  // namespace pairsec

#endif
