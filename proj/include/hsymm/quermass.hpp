#pragma once

#include <cstdint>
#include <vector>

#include "hsymm/convex_core.hpp"

namespace hsymm {

// W_0..W_n: Steiner coefficients |Omega + rho B| = sum C(n,i) W_i rho^i.
// W_0 = volume, n W_1 = perimeter / surface area, W_n = omega_n.
struct QuermassVector {
    int n = 2;
    std::vector<double> w;
};

QuermassVector quermassintegrals(const ConvexBody& body);

// zeta_k = (W_k / omega_n)^(1/(n-k)), 0 <= k <= n-1; exactly 0 for W_k = 0.
double mean_radius(const QuermassVector& q, int k);
double mean_radius(const ConvexBody& body, int k);

// Monte-Carlo volume of Omega + rho B by membership sampling in a bounding box.
double mc_volume(const ConvexBody& body, double rho, long samples, uint64_t seed, double* stderr_out = nullptr);

struct SteinerCheck {
    double predicted = 0.0;
    double estimated = 0.0;
    double stderr_ = 0.0;
    bool pass() const { return std::abs(predicted - estimated) <= 4.0 * stderr_; }
};

// Steiner polynomial vs Monte-Carlo volume of the inflated body.
SteinerCheck steiner_volume_check(const ConvexBody& body, double rho, long samples, uint64_t seed);

// Independent quermassintegral oracle: sample |Omega + rho B| at several
// inflation radii and least-squares fit the degree-n Steiner polynomial.
QuermassVector steiner_fit_quermass(const ConvexBody& body, long samples, uint64_t seed);

struct AsymmetryRecord {
    double d_h_to_steiner_ball = 0.0;
    double zeta_nm1 = 0.0;
    double alpha = 0.0;  // in [0, 1], 0 exactly for balls
};

// alpha_H = d_H(Omega, Steiner ball) / zeta_{n-1}(Omega).
AsymmetryRecord hausdorff_asymmetry(const ConvexBody& body);

}  // namespace hsymm
