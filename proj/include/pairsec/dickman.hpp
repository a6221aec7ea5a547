#ifndef PAIRSEC_DICKMAN_HPP
#define PAIRSEC_DICKMAN_HPP

#include <vector>

namespace pairsec {

// Dickman's rho from the integral identity u*rho(u) = integral of rho over
// [u-1, u]: log2(rho) is tabulated on a fine uniform grid, each new point
// closing a composite Simpson rule whose right endpoint is the unknown.
// Values far below double range stay representable through log2_rho.
class RhoTable {
  public:
    explicit RhoTable(double u_max = 320.0);

    double log2_rho(double u) const;  // throws std::invalid_argument for u < 0
    double rho(double u) const;       // direct value; underflows to 0 for huge u
    double rho_prime(double u) const; // via u*rho'(u) = -rho(u-1)
    double u_max() const { return 1.0 + static_cast<double>(y_.size() - 1) * kStep; }

  private:
    static constexpr double kStep = 1.0 / 256;
    static constexpr int kPerUnit = 256;
    std::vector<double> y_;  // log2(rho) at u = 1 + i*kStep
};

// Shared table built on first use.
const RhoTable& rho_table();
double log2_rho(double u);

}  // namespace pairsec

#endif
