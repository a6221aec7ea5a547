#ifndef PAIRSEC_PAIRING_COST_HPP
#define PAIRSEC_PAIRING_COST_HPP

#include <map>
#include <string>
#include <vector>

#include "pairsec/security.hpp"

namespace pairsec {

// Operation-count weights; defaults reconstructed from Karatsuba-style tower
// arithmetic. Absolute numbers are indicative, orderings are what is modelled.
struct PairingModel {
    std::map<int, double> ext_mult_weight = {
        {12, 54}, {16, 81}, {18, 108}, {24, 162}};  // F_p mults per F_p^k mult
    double miller_mults_per_iter = 1.5;  // extension mults per loop bit
    std::map<std::string, double> final_exp_per_u_bit = {
        {"BN", 3}, {"BLS12", 5}, {"BLS24", 9}, {"KSS16", 9}, {"KSS18", 11}};
    double word_exponent = 2.0;  // schoolbook; < 2 for sub-quadratic

    double base_mult_words(int p_bits) const;
};

// log2 of total word multiplications for one pairing at the given p size
double pairing_cost(const std::string& family, int p_bits, const PairingModel& model = {});

struct LevelEntry {
    std::string family;
    int p_bits = 0;
    double log2_cost = 0;
};

// Families ranked by pairing cost at their minimal p reaching the level;
// families that cannot reach it are omitted.
std::vector<LevelEntry> compare_at_level(double level_bits, const SecurityOptions& opts,
                                         const PairingModel& model = {});

}  // namespace pairsec

#endif
