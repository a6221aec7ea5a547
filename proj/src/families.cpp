#include "pairsec/families.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace pairsec {

bool is_probable_prime(const Integer& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), kPrimalityRounds) != 0;
}

bool FamilySpec::congruence_ok(const Integer& u) const {
    for (const auto& c : seed_congruences) {
        Integer m(c.modulus);
        Integer res = u % m;
        if (res < 0) res += m;
        unsigned long r = res.get_ui();
        if (std::find(c.residues.begin(), c.residues.end(), r) == c.residues.end())
            return false;
    }
    return true;
}

CurveInstance instantiate(const FamilySpec& family, const Integer& u) {
    Integer pn = family.p_num.eval(u);
    Integer rn = family.r_num.eval(u);
    if (pn % family.p_den != 0 || rn % family.r_den != 0)
        throw SeedCongruenceError("seed " + u.get_str() + " does not make p and r integral for " +
                                  family.name);
    CurveInstance inst;
    inst.family = family.name;
    inst.u = u;
    inst.p = pn / family.p_den;
    inst.r = rn / family.r_den;
    inst.k = family.k;
    if (inst.p < 2 || !is_probable_prime(inst.p))
        throw NonPrimeInstanceError(family.name + ": p(" + u.get_str() + ") is not prime");
    if (inst.r < 2 || !is_probable_prime(inst.r))
        throw NonPrimeInstanceError(family.name + ": r(" + u.get_str() + ") is not prime");
    inst.p_bits = bit_length(inst.p);
    inst.r_bits = bit_length(inst.r);
    return inst;
}

namespace {

// signed-binary candidate: u = sign * (2^e0 + sum_i s_i 2^(e_i))
Integer build_candidate(int e0, const std::vector<int>& exps, const std::vector<int>& signs,
                        int sign) {
    Integer u(0);
    mpz_setbit(u.get_mpz_t(), e0);
    for (size_t i = 0; i < exps.size(); ++i) {
        Integer b(0);
        mpz_setbit(b.get_mpz_t(), exps[i]);
        if (signs[i] > 0)
            u += b;
        else
            u -= b;
    }
    if (sign < 0) u = -u;
    return u;
}

}  // namespace

Integer find_seed(const FamilySpec& family, int target_p_bits, int max_hamming_weight,
                  const SeedSearchOptions& opts) {
    if (target_p_bits < 64) throw std::invalid_argument("find_seed: target_p_bits < 64");
    const int deg = family.p_num.degree();
    const double lead = log2_abs(family.p_num.leading()) - log2_abs(family.p_den);
    const int e0_center = std::max(2, static_cast<int>(std::lround((target_p_bits - lead) / deg)) - 1);

    // budget counts candidates that reach the primality stage; the cheap
    // congruence/size rejects (the bulk at higher weights) get a separate,
    // much larger cap so the enumeration stays bounded
    long tested = 0;
    long enumerated = 0;
    auto try_u = [&](const Integer& u) -> bool {
        ++enumerated;
        if (!family.congruence_ok(u)) return false;
        Integer pn = family.p_num.eval(u);
        if (pn % family.p_den != 0) return false;
        Integer p = pn / family.p_den;
        const int pb = bit_length(p);
        if (pb < target_p_bits - opts.p_bits_slack || pb > target_p_bits + opts.p_bits_slack)
            return false;
        ++tested;
        if (mpz_probab_prime_p(p.get_mpz_t(), 1) == 0) return false;
        Integer rn = family.r_num.eval(u);
        if (rn % family.r_den != 0) return false;
        Integer r = rn / family.r_den;
        if (mpz_probab_prime_p(r.get_mpz_t(), 1) == 0) return false;
        return is_probable_prime(p) && is_probable_prime(r);
    };

    const int hw_cap = std::max(2, max_hamming_weight);
    std::vector<int> signs;
    for (int weight = 1; weight <= hw_cap; ++weight) {
        const int extra = weight - 1;  // positions below the top bit
        for (int e0 = e0_center; e0 <= e0_center + 1; ++e0) {
            if (extra >= e0) continue;
            // combinations comb[0] < comb[1] < ... of exponents in [0, e0)
            std::vector<int> comb(extra);
            for (int i = 0; i < extra; ++i) comb[i] = i;
            while (true) {
                for (int smask = 0; smask < (1 << extra); ++smask) {
                    signs.assign(extra, 1);
                    for (int i = 0; i < extra; ++i)
                        if ((smask >> i) & 1) signs[i] = -1;
                    for (int topsign : {1, -1}) {
                        Integer u = build_candidate(e0, comb, signs, topsign);
                        if (tested >= opts.budget || enumerated >= 64 * opts.budget)
                            throw SeedNotFoundError("find_seed: budget of " +
                                                    std::to_string(opts.budget) +
                                                    " candidates exhausted for " + family.name);
                        if (try_u(u)) return u;
                    }
                }
                if (extra == 0) break;
                int i = extra - 1;
                while (i >= 0 && comb[i] == e0 - 1 - (extra - 1 - i)) --i;
                if (i < 0) break;
                ++comb[i];
                for (int j = i + 1; j < extra; ++j) comb[j] = comb[j - 1] + 1;
            }
        }
    }
    throw SeedNotFoundError("find_seed: no seed with weight <= " + std::to_string(hw_cap) +
                            " for " + family.name + " at " + std::to_string(target_p_bits) +
                            " bits (" + std::to_string(tested) + " candidates)");
}

// ---------------------------------------------------------------------------

namespace {

Integer hex_or_dec(const std::string& s) {
    if (s.rfind("0x", 0) == 0 || s.rfind("-0x", 0) == 0) {
        bool neg = s[0] == '-';
        Integer v;
        v.set_str(s.substr(neg ? 3 : 2), 16);
        return neg ? -v : v;
    }
    return Integer(s);
}

// seeds in the registry file and builtin table use a tiny expression grammar:
// sums of +-2^k terms or plain hex/decimal constants
Integer parse_seed(const std::string& expr) {
    std::string s;
    for (char c : expr)
        if (!isspace(static_cast<unsigned char>(c))) s += c;
    if (s.find("2^") == std::string::npos) return hex_or_dec(s);
    Integer total(0);
    size_t i = 0;
    int sign = 1;
    while (i < s.size()) {
        if (s[i] == '+') {
            sign = 1;
            ++i;
        } else if (s[i] == '-') {
            sign = -1;
            ++i;
        }
        size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        Integer v;
        if (term.rfind("2^", 0) == 0) {
            v = 0;
            mpz_setbit(v.get_mpz_t(), std::stoi(term.substr(2)));
        } else {
            v = hex_or_dec(term);
        }
        total += sign * v;
        i = j;
    }
    return total;
}

UniPoly poly_from_desc_longs(std::initializer_list<long> v) { return UniPoly::from_desc(v); }

}  // namespace

const Registry& Registry::builtin() {
    static const Registry cached = [] {
    Registry reg;

    FamilySpec bn;
    bn.name = "BN";
    bn.k = 12;
    bn.p_num = poly_from_desc_longs({36, 36, 24, 6, 1});
    bn.r_num = poly_from_desc_longs({36, 36, 18, 6, 1});
    bn.trace = poly_from_desc_longs({6, 0, 1});
    reg.add_family(bn);

    FamilySpec bls12;
    bls12.name = "BLS12";
    bls12.k = 12;
    // 3p = (u-1)^2 (u^4 - u^2 + 1) + 3u
    bls12.p_num = (UniPoly{-1, 1} * UniPoly{-1, 1}) * UniPoly{1, 0, -1, 0, 1, 0} + UniPoly{0, 3};
    bls12.p_den = 3;
    bls12.r_num = UniPoly{1, 0, -1, 0, 1};  // u^4 - u^2 + 1
    bls12.seed_congruences = {{3, {1}}};
    reg.add_family(bls12);

    FamilySpec bls24;
    bls24.name = "BLS24";
    bls24.k = 24;
    bls24.r_num = UniPoly{1, 0, 0, 0, -1, 0, 0, 0, 1};  // u^8 - u^4 + 1
    bls24.p_num = (UniPoly{-1, 1} * UniPoly{-1, 1}) * bls24.r_num + UniPoly{0, 3};
    bls24.p_den = 3;
    bls24.seed_congruences = {{3, {1}}};
    reg.add_family(bls24);

    FamilySpec kss16;
    kss16.name = "KSS16";
    kss16.k = 16;
    // 980 p = u^10 + 2u^9 + 5u^8 + 48u^6 + 152u^5 + 240u^4 + 625u^2 + 2398u + 3125
    kss16.p_num =
        poly_from_desc_longs({1, 2, 5, 0, 48, 152, 240, 0, 625, 2398, 3125});
    kss16.p_den = 980;
    kss16.r_num = poly_from_desc_longs({1, 0, 0, 0, 48, 0, 0, 0, 625});
    kss16.r_den = 61250;
    kss16.seed_congruences = {{70, {25, 45}}};
    reg.add_family(kss16);

    FamilySpec kss18;
    kss18.name = "KSS18";
    kss18.k = 18;
    kss18.p_num = poly_from_desc_longs({1, 5, 7, 37, 188, 259, 343, 1763, 2401});
    kss18.p_den = 21;
    kss18.r_num = poly_from_desc_longs({1, 0, 0, 37, 0, 0, 343});
    kss18.r_den = 343;
    kss18.seed_congruences = {{42, {7, 14, 28, 35}}};
    reg.add_family(kss18);

    const struct {
        const char* name;
        const char* family;
        const char* seed;
    } curves[] = {
        {"BN256", "BN", "0x600000000058f98a"},
        {"BN446", "BN", "2^110 + 2^36 + 1"},
        {"BN512", "BN", "0x6882F5C030B0F7F010B306BB5E1BD80F"},
        {"BN638", "BN", "2^158 - 2^129 + 2^128 - 2^68 + 1"},
        {"BLS12-381", "BLS12", "-2^63 - 2^62 - 2^60 - 2^57 - 2^48 - 2^16"},
        {"BLS12-440", "BLS12", "-2^74 + 2^72 - 2^41 + 2^26 - 2^16"},
        {"BLS12-462", "BLS12", "-2^77 + 2^50 + 2^33"},
        {"BLS24-479", "BLS24", "2^48 - 2^14 - 2^12 - 2^4"},
        {"BLS24-559", "BLS24", "-2^56 - 2^43 + 2^9 - 2^6"},
        {"KSS18-508", "KSS18", "-2^64 - 2^51 + 2^46 + 2^12"},
        {"KSS18-676", "KSS18", "-2^85 - 2^31 - 2^26 + 2^6"},
    };
    for (const auto& c : curves) reg.add_curve({c.name, c.family, parse_seed(c.seed)});
    return reg;
    }();
    return cached;
}

const FamilySpec& Registry::family(const std::string& name) const {
    for (const auto& f : families_)
        if (f.name == name) return f;
    throw std::invalid_argument("unknown family: " + name);
}

bool Registry::has_curve(const std::string& name) const {
    for (const auto& c : curves_)
        if (c.name == name) return true;
    return false;
}

CurveInstance Registry::curve(const std::string& name) const {
    for (const auto& c : curves_)
        if (c.name == name) {
            CurveInstance inst = instantiate(family(c.family), c.u);
            inst.name = c.name;
            return inst;
        }
    throw std::invalid_argument("unknown curve: " + name);
}

void Registry::add_family(FamilySpec spec) {
    for (auto& f : families_)
        if (f.name == spec.name) {
            f = std::move(spec);
            return;
        }
    families_.push_back(std::move(spec));
}

void Registry::add_curve(RegisteredCurve curve) {
    for (auto& c : curves_)
        if (c.name == curve.name) {
            c = std::move(curve);
            return;
        }
    curves_.push_back(std::move(curve));
}

namespace {

UniPoly parse_poly_csv(const std::string& s) {
    // ascending comma-separated coefficients
    std::vector<Integer> c;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (!tok.empty()) c.emplace_back(tok);
    }
    return UniPoly(std::move(c));
}

std::string strip(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

void Registry::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open families file: " + path);
    std::string line;
    FamilySpec cur;
    bool have = false;
    auto flush = [&] {
        if (have) add_family(cur);
        cur = FamilySpec{};
        have = false;
    };
    while (std::getline(in, line)) {
        line = strip(line.substr(0, line.find('#')));
        if (line.empty()) continue;
        if (line.front() == '[') {
            flush();
            std::string head = strip(line.substr(1, line.find(']') - 1));
            if (head.rfind("family ", 0) != 0)
                throw std::runtime_error("families file: expected [family NAME]");
            cur.name = strip(head.substr(7));
            have = true;
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error("families file: expected key = value");
        std::string key = strip(line.substr(0, eq));
        std::string val = strip(line.substr(eq + 1));
        if (!have) throw std::runtime_error("families file: key outside [family] section");
        if (key == "k")
            cur.k = std::stoi(val);
        else if (key == "p_num")
            cur.p_num = parse_poly_csv(val);
        else if (key == "p_den")
            cur.p_den = Integer(val);
        else if (key == "r_num")
            cur.r_num = parse_poly_csv(val);
        else if (key == "r_den")
            cur.r_den = Integer(val);
        else if (key == "trace")
            cur.trace = parse_poly_csv(val);
        else if (key == "congruence") {
            // modulus: r1 r2 ...
            size_t colon = val.find(':');
            SeedCongruence c;
            c.modulus = std::stoul(val.substr(0, colon));
            std::stringstream ss(val.substr(colon + 1));
            unsigned long r;
            while (ss >> r) c.residues.push_back(r);
            cur.seed_congruences.push_back(c);
        } else if (key == "seed") {
            // NAME: expression
            size_t colon = val.find(':');
            RegisteredCurve rc;
            rc.name = strip(val.substr(0, colon));
            rc.family = cur.name;
            rc.u = parse_seed(val.substr(colon + 1));
            add_curve(rc);
        } else {
            throw std::runtime_error("families file: unknown key " + key);
        }
    }
    flush();
}

}  // namespace pairsec
