#include "pairsec/tnfs_setup.hpp"

#include <sstream>
#include <vector>

namespace pairsec {

namespace {

UniPoly h_from_desc(std::initializer_list<long> c) { return UniPoly::from_desc(c); }

void check_h_shape(const UniPoly& h, int eta) {
    if (h.degree() != eta || h.leading() != 1)
        throw SetupValidationError("h must be monic of degree eta");
    for (const auto& c : h.coeffs())
        if (c < -1 || c > 1) throw SetupValidationError("h coefficients must lie in {-1,0,1}");
}

// f2 = g - u, f1 = p_num(g); at a shared root g = u so f1 = p_num(u) = p_den*p.
// kappa=1 setups may shift the root: f2 = x - x0, f1 = p_num(x + u - x0).
void check_shared_root(const TnfsSetup& s, const FamilySpec& fam, const Integer& u) {
    Integer v = fam.p_num.eval(u);
    if (v != s.f1_multiplier * s.p)
        throw SetupValidationError(s.family + ": p_num(u) != p_den * p");
    if (s.f2.deg_t() == 0 && s.f2.deg_x() == 1) {  // kappa=1 shape
        Integer x0 = -s.f2.coeff_x(0).eval(0);     // f2 = x - x0
        if (eval_bi(s.f1, x0, 0) != s.f1_multiplier * s.p)
            throw SetupValidationError(s.family +
                                       ": f1 does not vanish mod p at the shared root");
        return;
    }
    // kappa=2 shape: f2 = g(x,t) - u; confirm f1 == p_num composed with g
    BiPoly g = s.f2 + BiPoly::constant(u);
    BiPoly diff = BiPoly::compose(fam.p_num, g) + s.f1 * Integer(-1);
    if (!diff.is_zero())
        throw SetupValidationError(s.family + ": f1 is not p_num composed with the f2 kernel");
}

}  // namespace

UniPoly select_h(int eta, const Integer& p, long budget) {
    if (eta < 2) throw HSelectionError("eta must be at least 2");
    long tried = 0;
    // increasing count of nonzero low-order terms; constant term always nonzero
    // (otherwise t divides h)
    for (int m = 1; m <= eta; ++m) {
        std::vector<int> pos(m);  // pos[0]=0 fixed, rest increasing in [1,eta)
        for (int i = 0; i < m; ++i) pos[i] = i;
        while (true) {
            for (int smask = 0; smask < (1 << m); ++smask) {
                std::vector<Integer> c(eta + 1, 0);
                c[eta] = 1;
                for (int i = 0; i < m; ++i) c[pos[i]] = (smask >> i & 1) ? -1 : 1;
                if (++tried > budget) throw HSelectionError("h selection budget exhausted");
                UniPoly h{std::vector<Integer>(c)};
                if (is_irreducible_mod_p(h, p)) return h;
            }
            int i = m - 1;
            while (i >= 1 && pos[i] == eta - 1 - (m - 1 - i)) --i;
            if (i < 1) break;  // pos[0] stays 0
            ++pos[i];
            for (int j = i + 1; j < m; ++j) pos[j] = pos[j - 1] + 1;
        }
    }
    throw HSelectionError("no irreducible h of the requested degree");
}

namespace {

UniPoly taylor_shift(const UniPoly& p, long s) {
    UniPoly xs{s, 1};  // x + s
    UniPoly q;
    for (int i = p.degree(); i >= 0; --i)
        q = q * xs + UniPoly{std::vector<Integer>{p.coeff(i)}};
    return q;
}

double coeff_score(const UniPoly& p) {
    Integer sc = 0;
    for (const Integer& c : p.coeffs()) sc += abs(c);
    return log2_abs(sc);
}

// For the direct (kappa=1) setups f1 = p_num(x + s): a small shift of the
// root can shrink the coefficients considerably (KSS18: max 2401 -> 453),
// and the norms with them. Smallest |s| wins ties, so BLS24 keeps s = 0.
long best_shift(const UniPoly& p_num) {
    long best = 0;
    double best_sc = coeff_score(p_num);
    for (long a = 1; a <= 8; ++a)
        for (long s : {-a, a}) {
            double sc = coeff_score(taylor_shift(p_num, s));
            if (sc < best_sc) { best_sc = sc; best = s; }
        }
    return best;
}

}  // namespace

TnfsSetup build_setup(const CurveInstance& instance, bool strict) {
    const FamilySpec& fam = Registry::builtin().family(instance.family);
    TnfsSetup s;
    s.family = instance.family;
    s.curve_name = instance.name;
    s.p = instance.p;
    s.r_bits = instance.r_bits;
    s.w = 1;
    const Integer& u = instance.u;

    if (instance.family == "BN") {
        s.eta = 6;
        s.kappa = 2;
        s.h = h_from_desc({1, 0, 0, -1, 0, -1, -1});
        BiPoly g = BiPoly::var_x() * BiPoly::var_x() + BiPoly::var_t();
        s.f1 = BiPoly::compose(fam.p_num, g);
        s.f2 = g + BiPoly::constant(-u);
        s.aut = 2;
    } else if (instance.family == "BLS12") {
        s.eta = 6;
        s.kappa = 2;
        s.h = h_from_desc({1, 0, 0, 0, 0, -1, -1});
        BiPoly t = BiPoly::var_t();
        BiPoly g = BiPoly::var_x() * BiPoly::var_x() + t + t * t + t * t * t * t +
                   BiPoly::constant(1);
        s.f1 = BiPoly::compose(fam.p_num, g);
        s.f2 = g + BiPoly::constant(-u);
        s.aut = 2;
    } else if (instance.family == "BLS24") {
        s.eta = 24;
        s.kappa = 1;
        std::vector<Integer> hc(25, 0);
        hc[24] = 1; hc[4] = 1; hc[3] = -1; hc[1] = -1; hc[0] = -1;
        s.h = UniPoly{std::move(hc)};
        long sh = best_shift(fam.p_num);
        s.f1 = BiPoly::from_x(taylor_shift(fam.p_num, sh));
        s.f2 = BiPoly::var_x() + BiPoly::constant(sh - u);
        s.aut = 1;
    } else if (instance.family == "KSS18") {
        s.eta = 18;
        s.kappa = 1;
        std::vector<Integer> hc(19, 0);
        hc[18] = 1; hc[4] = -1; hc[2] = -1; hc[1] = -1; hc[0] = -1;
        s.h = UniPoly{std::move(hc)};
        long sh = best_shift(fam.p_num);
        s.f1 = BiPoly::from_x(taylor_shift(fam.p_num, sh));
        s.f2 = BiPoly::var_x() + BiPoly::constant(sh - u);
        s.aut = 1;
    } else if (instance.family == "KSS16") {
        // no published recipe for k=16; same shape as the other kappa=1 setups
        s.eta = 16;
        s.kappa = 1;
        s.h = select_h(16, instance.p);
        long sh = best_shift(fam.p_num);
        s.f1 = BiPoly::from_x(taylor_shift(fam.p_num, sh));
        s.f2 = BiPoly::var_x() + BiPoly::constant(sh - u);
        s.aut = 1;
        s.extrapolated_recipe = true;
    } else {
        throw RecipeIncompatibilityError("no setup recipe for family " + instance.family);
    }

    s.f1_multiplier = fam.p_den;
    if (s.eta * s.kappa != instance.k)
        throw RecipeIncompatibilityError(s.family + ": eta*kappa != embedding degree");
    check_h_shape(s.h, s.eta);
    check_shared_root(s, fam, u);

    s.h_irreducible_mod_p = is_irreducible_mod_p(s.h, instance.p);
    if (strict && !s.h_irreducible_mod_p) {
        s.h = select_h(s.eta, instance.p);
        s.h_irreducible_mod_p = true;
        s.w = 1;
        s.aut = 1;  // replacement h carries no exploitable automorphisms
    }
    return s;
}

std::string setup_to_text(const TnfsSetup& s) {
    std::ostringstream os;
    os << "family " << s.family << " curve " << s.curve_name << "\n"
       << "eta " << s.eta << " kappa " << s.kappa << "\n"
       << "h " << s.h.str("t") << "\n"
       << "f1 " << s.f1.str() << "\n"
       << "f2 " << s.f2.str() << "\n"
       << "f1_multiplier " << s.f1_multiplier.get_str() << "\n"
       << "w " << s.w << " aut " << s.aut << "\n"
       << "h_irreducible_mod_p " << (s.h_irreducible_mod_p ? "true" : "false") << "\n"
       << "extrapolated_recipe " << (s.extrapolated_recipe ? "true" : "false") << "\n";
    return os.str();
}

}  // namespace pairsec
