#ifndef PAIRSEC_NORM_MC_HPP
#define PAIRSEC_NORM_MC_HPP

#include <cstdint>

#include "pairsec/tnfs_setup.hpp"

namespace pairsec {

struct NormEstimate {
    double log2_n1 = 0;  // mean of log2|N_f1| over the samples
    double log2_n2 = 0;
    long samples = 0;
    long A = 0;
    uint64_t seed = 0;
};

// Averages log2|Res_t(Res_x(a - x*b, f_i), h)| over random sieve polynomials with
// coefficients in [-A, A] (a_0 in [0, A]; the map (a,b) -> (-a,-b) fixes the
// norm). Deterministic for a given seed, independent of evaluation order.
NormEstimate estimate_norms(const TnfsSetup& s, long A, long samples, uint64_t seed);

// Single-sample norms, exposed for cross-route testing.
Integer sample_norm_reference(const BiPoly& f, const UniPoly& h, const UniPoly& a,
                              const UniPoly& b);
Integer sample_norm_crt(const BiPoly& f, const UniPoly& h, const UniPoly& a,
                        const UniPoly& b);

}  // namespace pairsec

#endif
