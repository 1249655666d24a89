#pragma once

#include <vector>

#include "hsymm/vec.hpp"

namespace hsymm {

// Volume of the unit n-ball (omega_1 = 2, omega_2 = pi, omega_3 = 4pi/3, ...).
double unit_ball_volume(int n);

// Gauss-Legendre nodes/weights on [-1, 1].
struct GaussRule {
    std::vector<double> x;
    std::vector<double> w;
};
GaussRule gauss_legendre(int m);

// Gauss-Legendre rule mapped to [a, b].
GaussRule gauss_on(double a, double b, int m);

// Quadrature design on S^{n-1}: unit directions plus weights summing to the
// sphere's surface measure. 2D: uniform angles (trapezoid rule, spectral for
// periodic integrands). 3D: Gauss-Legendre in cos(theta) x uniform phi.
struct SphereGrid {
    int n = 2;
    std::vector<Vec> dirs;
    std::vector<double> weights;  // sum = n * omega_n

    static SphereGrid circle(int m);
    static SphereGrid sphere(int n_theta, int n_phi);
    // default design for a given dimension (2048 nodes in 2D, 32x64 in 3D)
    static const SphereGrid& standard(int n);

    size_t size() const { return dirs.size(); }
};

}  // namespace hsymm
