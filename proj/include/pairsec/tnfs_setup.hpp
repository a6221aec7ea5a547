#ifndef PAIRSEC_TNFS_SETUP_HPP
#define PAIRSEC_TNFS_SETUP_HPP

#include <stdexcept>
#include <string>

#include "pairsec/families.hpp"
#include "pairsec/intpoly.hpp"

namespace pairsec {

struct TnfsSetup {
    std::string family;
    std::string curve_name;
    int eta = 0;    // degree of h
    int kappa = 0;  // eta * kappa = embedding degree
    UniPoly h;      // monic, coefficients in {-1,0,1}
    BiPoly f1;
    BiPoly f2;
    Integer f1_multiplier = 1;  // f1 represents multiplier * p at the shared root
    int w = 1;                  // half the number of roots of unity of h
    int aut = 1;                // automorphism count
    bool h_irreducible_mod_p = false;
    bool extrapolated_recipe = false;  // KSS16: no recipe published
    Integer p;                         // characteristic, for validation context
    int r_bits = 0;
};

class SetupValidationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
class RecipeIncompatibilityError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
class HSelectionError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Monic degree-eta polynomial with coefficients in {-1,0,1}, irreducible mod
// p, found by enumerating candidates with few nonzero terms. Deterministic.
UniPoly select_h(int eta, const Integer& p, long budget = 200000);

// Instantiate the registered family recipe at the instance's seed. With
// strict=false (default) the published recipe is kept verbatim even when its
// h turns out reducible mod p; the flag in the result records the check.
// With strict=true a reducible h triggers a select_h fallback with w=aut=1.
TnfsSetup build_setup(const CurveInstance& instance, bool strict = false);

// Structured text export (audit): polynomial coefficient lists and constants.
std::string setup_to_text(const TnfsSetup& s);

}  // namespace pairsec

#endif
