#ifndef PAIRSEC_FAMILIES_HPP
#define PAIRSEC_FAMILIES_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pairsec/intpoly.hpp"

namespace pairsec {

struct SeedCongruence {
    unsigned long modulus = 1;
    std::vector<unsigned long> residues;  // allowed values of u mod modulus (u >= 0 rep)
};

struct FamilySpec {
    std::string name;
    int k = 0;                 // embedding degree
    UniPoly p_num;             // p(u) = p_num(u) / p_den
    Integer p_den = 1;
    UniPoly r_num;             // r(u) = r_num(u) / r_den
    Integer r_den = 1;
    std::optional<UniPoly> trace;  // t(u), where registered (BN: 6u^2+1)
    std::vector<SeedCongruence> seed_congruences;

    bool congruence_ok(const Integer& u) const;
};

struct CurveInstance {
    std::string family;
    std::string name;  // display name, e.g. "BN256"; empty for swept instances
    Integer u;
    Integer p;
    Integer r;
    int k = 0;
    int p_bits = 0;
    int r_bits = 0;
};

class SeedCongruenceError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
class NonPrimeInstanceError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};
class SeedNotFoundError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Miller-Rabin rounds used throughout (estimator context, not key generation).
inline constexpr int kPrimalityRounds = 64;

bool is_probable_prime(const Integer& n);

CurveInstance instantiate(const FamilySpec& family, const Integer& u);

struct SeedSearchOptions {
    int max_hamming_weight = 5;
    long budget = 20'000'000;  // candidate evaluations before giving up
    int p_bits_slack = 2;
};

// Low signed-Hamming-weight seed with p and r prime and p_bits within slack
// of the target. Deterministic enumeration order: weight ascending, then top
// exponent, then lower-bit positions/signs, positive u before negative.
Integer find_seed(const FamilySpec& family, int target_p_bits, int max_hamming_weight,
                  const SeedSearchOptions& opts = {});

struct RegisteredCurve {
    std::string name;
    std::string family;
    Integer u;
};

class Registry {
  public:
    static const Registry& builtin();

    const FamilySpec& family(const std::string& name) const;
    const std::vector<FamilySpec>& families() const { return families_; }
    const std::vector<RegisteredCurve>& curves() const { return curves_; }
    CurveInstance curve(const std::string& name) const;
    bool has_curve(const std::string& name) const;

    void add_family(FamilySpec spec);
    void add_curve(RegisteredCurve curve);

    // Merge families/seeds from a structured text file (see data/families.txt).
    void load_file(const std::string& path);

  private:
    std::vector<FamilySpec> families_;
    std::vector<RegisteredCurve> curves_;
};

}  // namespace pairsec

#endif
