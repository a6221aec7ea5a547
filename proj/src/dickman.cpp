#include "pairsec/dickman.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pairsec {

RhoTable::RhoTable(double u_max) {
    const int n = std::max(2 * kPerUnit, static_cast<int>(std::ceil((u_max - 1.0) * kPerUnit)));
    y_.resize(n + 1);

    // [1,2]: rho(u) = 1 - ln u exactly
    for (int i = 0; i <= kPerUnit; ++i)
        y_[i] = std::log2(1.0 - std::log1p(i * kStep));

    // each further point closes a Simpson rule over [u-1, u] in which the
    // right endpoint is the unknown: u*rho(u) = h/3 * (S + rho(u))
    for (int i = kPerUnit + 1; i <= n; ++i) {
        const double u = 1.0 + i * kStep;
        const int base = i - kPerUnit;
        const double yref = y_[base];  // window maximum (rho decreases)
        double s = 0.0;
        for (int j = 0; j < kPerUnit; ++j) {
            double w = (j == 0) ? 1.0 : (j % 2 ? 4.0 : 2.0);
            s += w * std::exp2(y_[base + j] - yref);
        }
        y_[i] = yref + std::log2((kStep / 3.0) * s / (u - kStep / 3.0));
    }
}

double RhoTable::log2_rho(double u) const {
    if (u < 0.0) throw std::invalid_argument("log2_rho: negative argument");
    if (u <= 1.0) return 0.0;
    const int n = static_cast<int>(y_.size()) - 1;
    const double t = (u - 1.0) * kPerUnit;
    if (t >= n) {
        // beyond the table: continue with the final unit interval's slope;
        // only reached by grid points that are hopelessly infeasible anyway
        const double slope = y_[n] - y_[n - kPerUnit];
        return y_[n] + (t - n) * kStep * slope;
    }
    // 4-point Lagrange interpolation on the grid
    int i1 = std::clamp(static_cast<int>(std::floor(t)), 1, n - 2);
    const double x = t - i1;
    const double ym1 = y_[i1 - 1], y0 = y_[i1], y1 = y_[i1 + 1], y2 = y_[i1 + 2];
    return -ym1 * x * (x - 1.0) * (x - 2.0) / 6.0 +
           y0 * (x + 1.0) * (x - 1.0) * (x - 2.0) / 2.0 -
           y1 * (x + 1.0) * x * (x - 2.0) / 2.0 +
           y2 * (x + 1.0) * x * (x - 1.0) / 6.0;
}

double RhoTable::rho(double u) const {
    if (u < 0.0) throw std::invalid_argument("rho: negative argument");
    if (u <= 1.0) return 1.0;
    return std::exp2(log2_rho(u));
}

double RhoTable::rho_prime(double u) const {
    if (u < 0.0) throw std::invalid_argument("rho_prime: negative argument");
    if (u < 1.0) return 0.0;
    return -rho(u - 1.0) / u;  // the delay ODE itself
}

const RhoTable& rho_table() {
    static const RhoTable table;
    return table;
}

double log2_rho(double u) { return rho_table().log2_rho(u); }

}  // namespace pairsec
