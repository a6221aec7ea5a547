#ifndef PAIRSEC_MODARITH_HPP
#define PAIRSEC_MODARITH_HPP

#include <cstdint>
#include <vector>

#include "pairsec/intpoly.hpp"

namespace pairsec {

// Montgomery arithmetic for a fixed odd 62-bit prime.
struct MontPrime {
    uint64_t p = 0;
    uint64_t pinv = 0;  // -p^-1 mod 2^64
    uint64_t r2 = 0;    // 2^128 mod p
    uint64_t one = 0;   // 2^64 mod p

    explicit MontPrime(uint64_t prime);
    MontPrime() = default;

    uint64_t redc(unsigned __int128 t) const {
        uint64_t m = static_cast<uint64_t>(t) * pinv;
        unsigned __int128 s = t + static_cast<unsigned __int128>(m) * p;
        uint64_t r = static_cast<uint64_t>(s >> 64);
        return r >= p ? r - p : r;
    }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return redc(static_cast<unsigned __int128>(a) * b);
    }
    uint64_t to_mont(uint64_t a) const { return mul(a, r2); }
    uint64_t from_mont(uint64_t a) const { return redc(a); }
    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p - b; }
    uint64_t pow(uint64_t base, uint64_t e) const;  // base in Montgomery form
    uint64_t inv(uint64_t a) const { return pow(a, p - 2); }
};

// Shared list of 62-bit CRT primes, descending from just below 2^62.
// Deterministic; grows on demand.
const std::vector<uint64_t>& crt_primes(size_t count);

// Polynomial over F_p in Montgomery form, ascending coefficients, trimmed.
using MPolyVec = std::vector<uint64_t>;

// Resultant of two univariate polynomials over F_p. Returns the value in
// ordinary (non-Montgomery) representation.
uint64_t resultant_mod_p(MPolyVec a, MPolyVec b, const MontPrime& mp);

// Incremental CRT reconstruction into a signed integer in (-M/2, M/2].
class CrtReconstructor {
  public:
    explicit CrtReconstructor(const std::vector<uint64_t>& primes);
    // residues[i] = value mod primes[i], plain representation
    Integer reconstruct(const std::vector<uint64_t>& residues) const;

  private:
    std::vector<uint64_t> primes_;
    std::vector<Integer> prefix_;     // prefix_[i] = p_0*...*p_{i-1}
    std::vector<uint64_t> prefinv_;   // (prefix_[i])^-1 mod p_i
    Integer modulus_;
    Integer half_;
};

}  // namespace pairsec

#endif
