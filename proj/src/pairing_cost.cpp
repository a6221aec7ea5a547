#include "pairsec/pairing_cost.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pairsec {

double PairingModel::base_mult_words(int p_bits) const {
    return std::pow(std::ceil(p_bits / 64.0), word_exponent);
}

double pairing_cost(const std::string& family, int p_bits, const PairingModel& model) {
    const Registry& reg = Registry::builtin();
    const FamilySpec& fam = reg.family(family);
    auto wit = model.ext_mult_weight.find(fam.k);
    auto fit = model.final_exp_per_u_bit.find(family);
    if (wit == model.ext_mult_weight.end() || fit == model.final_exp_per_u_bit.end())
        throw std::invalid_argument("no pairing model weights for family " + family);

    double u_bits = static_cast<double>(p_bits) / fam.p_num.degree();
    double loop_bits = u_bits;
    if (family == "BN") loop_bits = u_bits + std::log2(6.0);  // |6u+2|
    double ext_mults =
        loop_bits * model.miller_mults_per_iter + u_bits * fit->second;
    return std::log2(ext_mults * wit->second * model.base_mult_words(p_bits));
}

std::vector<LevelEntry> compare_at_level(double level_bits, const SecurityOptions& opts,
                                         const PairingModel& model) {
    std::vector<LevelEntry> out;
    for (const auto& fam : Registry::builtin().families()) {
        auto pb = min_p_for_level(fam.name, level_bits, opts);
        if (!pb) continue;
        out.push_back({fam.name, *pb, pairing_cost(fam.name, *pb, model)});
    }
    std::sort(out.begin(), out.end(), [](const LevelEntry& a, const LevelEntry& b) {
        return a.log2_cost != b.log2_cost ? a.log2_cost < b.log2_cost
                                          : a.family < b.family;
    });
    return out;
}

}  // namespace pairsec
