#ifndef PAIRSEC_COST_MODEL_HPP
#define PAIRSEC_COST_MODEL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pairsec/norm_mc.hpp"
#include "pairsec/tnfs_setup.hpp"

namespace pairsec {

// Constant choices for the sieve/filter/linear-algebra terms.
struct ModelParams {
    std::string name = "BD";
    bool eq2_linalg = false;  // use the (2B)^2 linear-algebra form

    double log2_c_sieve(double log2B) const;
    double log2_c_linalg(int r_bits) const;
    double log2_c_filter(double log2B) const;

    static ModelParams bd();
    static ModelParams gs();
    static ModelParams by_name(const std::string& name);  // "BD" or "GS"
};

// slack on the relation-count constraint, in bits; absorbs Monte-Carlo noise
// at optima that sit exactly on the boundary
inline constexpr double kRelationSlackBits = 0.35;

struct CostPoint {
    long A = 0;
    double log2B = 0;
    double log2_n1 = 0, log2_n2 = 0;
    double log2_rho1 = 0, log2_rho2 = 0;  // log2 of smoothness probabilities
    double log2_space = 0;
    double log2_relations = 0;
    double log2_factor_base = 0;
    double log2_sieve = 0;
    double log2_linalg = 0;
    double log2_total = 0;
    bool feasible = false;  // enough relations for the factor base
};

CostPoint evaluate_point(const TnfsSetup& s, const ModelParams& m, long A,
                         double log2B, double log2_n1, double log2_n2);

struct GridConfig {
    double log2A_min = 1;
    double log2A_max = 0;  // <= 0: scaled from p_bits, capped at 60
    double log2A_step = 0.25;
    double log2B_min = 10;
    double log2B_max = 0;  // <= 0: scaled from p_bits
    double log2B_step = 0.5;
    double refine_log2B_step = 0.1;
    long samples = 25600;        // final norm estimates at candidate optima
    long locate_samples = 256;   // cheap estimates fitting the norm-growth model
};

struct OptimizeResult {
    CostPoint best;
    long norm_estimates = 0;  // distinct A values sampled at full precision
};

// Minimises total cost over (A, B) subject to the relation-count constraint.
// log2(N_i) is close to piecewise-linear in log2(A), so a cheap sampled model
// locates the optimum and only its neighbourhood gets full-sample estimates.
// Deterministic for a given seed.
OptimizeResult optimize(const TnfsSetup& s, const ModelParams& m, const GridConfig& g,
                        uint64_t seed);

// security bits = log2 of cost at (Q, c, epsilon): epsilon + c*(ln Q)^(1/3)
// *(ln ln Q)^(2/3) / ln 2
double asymptotic_bits(double log2_Q, double c, double epsilon = 0);

struct AsymptoticVariant {
    std::string name;
    double c;
    std::optional<double> epsilon;
    std::string note;
};

// Named variants: the five fixed-c entries plus the epsilon-calibrated rows;
// SNFS-JP is parametric in tau and exposed as a function instead.
const std::vector<AsymptoticVariant>& asymptotic_variants();
double snfs_jp_c(double tau);

}  // namespace pairsec

#endif
