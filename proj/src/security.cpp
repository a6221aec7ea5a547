#include "pairsec/security.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace pairsec {

namespace {
const double kLog2PiOver4 = std::log2(std::atan(1.0));  // pi/4
}

double curve_side_bits(const Integer& r) {
    return 0.5 * (log2_abs(r) + kLog2PiOver4);
}

double curve_side_bits_from_r_bits(double r_bits) {
    return 0.5 * (r_bits + kLog2PiOver4);
}

SecurityProfile profile(const CurveInstance& curve, const SecurityOptions& opts) {
    TnfsSetup s = build_setup(curve, opts.strict_setup);
    OptimizeResult r = optimize(s, opts.model, opts.grid, opts.seed);
    SecurityProfile p;
    p.curve = curve;
    p.field = r.best;
    p.field_bits = r.best.feasible ? r.best.log2_total
                                   : std::numeric_limits<double>::infinity();
    p.curve_bits = curve_side_bits(curve.r);
    p.security_bits = std::min(p.field_bits, p.curve_bits);
    p.h_irreducible_mod_p = s.h_irreducible_mod_p;
    p.extrapolated_recipe = s.extrapolated_recipe;
    return p;
}

namespace {

std::optional<SweepPoint> point_at(const FamilySpec& fam, int p_bits,
                                   const SecurityOptions& opts) {
    // low weight first; congruence-constrained families (KSS) have sizes with
    // no weight-5 seed at all, so retry with a looser cap before giving up
    Integer u;
    bool found = false;
    for (int w : {SeedSearchOptions{}.max_hamming_weight, 8}) {
        try {
            u = find_seed(fam, p_bits, w);
            found = true;
            break;
        } catch (const SeedNotFoundError&) {
        }
    }
    if (!found) return std::nullopt;
    CurveInstance c = instantiate(fam, u);
    SecurityProfile pr = profile(c, opts);
    SweepPoint pt;
    pt.p_bits = c.p_bits;
    pt.r_bits = c.r_bits;
    pt.u = u;
    pt.field_bits = pr.field_bits;
    pt.curve_bits = pr.curve_bits;
    pt.security_bits = pr.security_bits;
    return pt;
}

}  // namespace

std::vector<SweepPoint> sweep_family(const std::string& family, int p_bits_lo,
                                     int p_bits_hi, int step,
                                     const SecurityOptions& opts) {
    const Registry& reg = Registry::builtin();
    const FamilySpec& fam = reg.family(family);
    std::vector<SweepPoint> out;
    for (int pb = p_bits_lo; pb <= p_bits_hi; pb += step)
        if (auto pt = point_at(fam, pb, opts)) out.push_back(std::move(*pt));
    return out;
}

std::optional<Crossover> find_crossover(const std::string& family, int p_bits_lo,
                                        int p_bits_hi, const SecurityOptions& opts) {
    const Registry& reg = Registry::builtin();
    const FamilySpec& fam = reg.family(family);

    auto diff_at = [&](int pb) -> std::optional<SweepPoint> { return point_at(fam, pb, opts); };
    auto diff = [](const SweepPoint& p) { return p.curve_bits - p.field_bits; };

    std::optional<SweepPoint> prev;
    for (int pb = p_bits_lo; pb <= p_bits_hi; pb += 20) {
        auto cur = diff_at(pb);
        if (!cur) continue;
        if (prev && diff(*prev) <= 0 && diff(*cur) > 0) {
            // refine the 20-bit bracket at 5-bit spacing
            SweepPoint lo = *prev, hi = *cur;
            for (int q = prev->p_bits + 5; q < cur->p_bits; q += 5) {
                auto mid = diff_at(q);
                if (!mid) continue;
                if (diff(*mid) <= 0)
                    lo = *mid;
                else {
                    hi = *mid;
                    break;
                }
            }
            double dl = diff(lo), dh = diff(hi);
            double frac = dh == dl ? 0.5 : -dl / (dh - dl);
            Crossover x;
            x.p_bits = static_cast<int>(std::lround(lo.p_bits + frac * (hi.p_bits - lo.p_bits)));
            x.level = lo.field_bits + frac * (hi.field_bits - lo.field_bits);
            return x;
        }
        prev = cur;
    }
    return std::nullopt;
}

std::optional<int> min_p_for_level(const std::string& family, double level_bits,
                                   const SecurityOptions& opts, int p_bits_max) {
    const Registry& reg = Registry::builtin();
    const FamilySpec& fam = reg.family(family);

    auto reaches = [&](int pb) {
        auto pt = point_at(fam, pb, opts);
        // a missing seed very rarely happens; treat as not reaching so the
        // bisection stays conservative
        return pt && pt->security_bits >= level_bits;
    };

    // security never exceeds p_bits, so a level above the cap is out of reach
    int lo = std::max(32, static_cast<int>(level_bits));
    if (lo > p_bits_max) return std::nullopt;
    if (reaches(lo)) return lo;
    // grow the bracket geometrically: seed searches get sharply more
    // expensive with size, so probe the cap only when nothing below reaches
    int hi = lo;
    bool found = false;
    while (hi < p_bits_max && !found) {
        lo = hi;
        hi = std::min(p_bits_max, 2 * hi);
        found = reaches(hi);
    }
    if (!found) return std::nullopt;
    while (hi - lo > 2) {
        int mid = (lo + hi) / 2;
        if (reaches(mid))
            hi = mid;
        else
            lo = mid;
    }
    return hi;
}

std::string sweep_to_csv(const std::vector<SweepPoint>& points) {
    std::ostringstream os;
    os << "p_bits,r_bits,u,field_bits,curve_bits,security_bits\n";
    os.setf(std::ios::fixed);
    os.precision(2);
    for (const auto& p : points)
        os << p.p_bits << ',' << p.r_bits << ',' << p.u.get_str() << ','
           << p.field_bits << ',' << p.curve_bits << ',' << p.security_bits << '\n';
    return os.str();
}

}  // namespace pairsec
