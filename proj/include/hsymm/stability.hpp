#pragma once

#include "hsymm/convex_core.hpp"
#include "hsymm/quermass.hpp"
#include "hsymm/report.hpp"

namespace hsymm {

// Every explicit constant of the quantitative inequalities, evaluated from
// its defining formula for dimension n and order k (1 <= k <= n-1). The C2
// constant is carried in two versions: the stated one and the one reassembled
// from kappa_5 * (1/(2(n+2))) * (omega_{n-1}/(n omega_n)); they differ by a
// factor 1/k. Checks use the smaller of the two.
struct ConstantsTable {
    int n = 2;
    int k = 1;
    double omega_n = 0.0;
    double omega_nm1 = 0.0;
    double beta_n = 0.0;
    double kappa1 = 0.0, kappa2 = 0.0, kappa3 = 0.0, kappa4 = 0.0, kappa5 = 0.0;
    double c1 = 0.0, c4 = 0.0, c5 = 0.0;
    double C2_stated = 0.0, C2_reassembled = 0.0, C3 = 0.0;
    double exp_gs = 0.0;      // (n+3)/2
    double exp_sup = 0.0;     // (n+5)/2
    double exp_energy = 0.0;  // (n+3)/2 + k + 1

    double C2_safe() const { return C2_stated < C2_reassembled ? C2_stated : C2_reassembled; }
    std::vector<std::pair<std::string, double>> entries() const;
};

ConstantsTable constants_table(int n, int k);

// s_m(x, y) = sum_{nu=0}^{m-1} x^nu y^{m-nu-1}
double s_poly(int m, double x, double y);

enum class GsForm { full, simplified, mean_radii };

// Quantitative quermassintegral inequality for the pair (i, j), 0 <= i < j <= n-1,
// with the deficit bounded below via the Hausdorff distance to the Steiner ball.
DeficitReport gs_bound_check(const ConvexBody& body, int i, int j, GsForm form);

// Propagation of the Hausdorff asymmetry from a body to a nested subset: if
// d_H(Omega, U) <= d_H(Omega, B_R) / (2(n+2)) then d_H(U, B_r) >= d_H(Omega, B_R) / 2.
DeficitReport propagation_check(const ConvexBody& outer, const ConvexBody& inner);

struct PowerBound {
    double lhs = 0.0;
    double rhs = 0.0;
    bool pass = false;
};

// (1+x)^alpha >= 1 + (alpha/2) x for alpha > 0, x in [0, 1].
PowerBound half_power_bound(double alpha, double x);

}  // namespace hsymm
