#include "hsymm/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hsymm {

double unit_ball_volume(int n) {
    if (n < 0) throw std::invalid_argument("unit_ball_volume: n < 0");
    return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

GaussRule gauss_legendre(int m) {
    if (m < 1) throw std::invalid_argument("gauss_legendre: order < 1");
    GaussRule rule;
    rule.x.resize(static_cast<size_t>(m));
    rule.w.resize(static_cast<size_t>(m));
    // Newton iteration on P_m from the Chebyshev initial guess.
    for (int i = 0; i < (m + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= m; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            pp = m * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * pp * pp);
        rule.x[static_cast<size_t>(i)] = -x;
        rule.w[static_cast<size_t>(i)] = w;
        rule.x[static_cast<size_t>(m - 1 - i)] = x;
        rule.w[static_cast<size_t>(m - 1 - i)] = w;
    }
    return rule;
}

GaussRule gauss_on(double a, double b, int m) {
    GaussRule r = gauss_legendre(m);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    for (size_t i = 0; i < r.x.size(); ++i) {
        r.x[i] = mid + half * r.x[i];
        r.w[i] *= half;
    }
    return r;
}

SphereGrid SphereGrid::circle(int m) {
    if (m < 4) throw std::invalid_argument("circle grid needs at least 4 nodes");
    SphereGrid g;
    g.n = 2;
    g.dirs.reserve(static_cast<size_t>(m));
    const double w = 2.0 * std::numbers::pi / m;
    for (int i = 0; i < m; ++i) {
        const double t = w * i;
        g.dirs.push_back(Vec::xy(std::cos(t), std::sin(t)));
        g.weights.push_back(w);
    }
    return g;
}

SphereGrid SphereGrid::sphere(int n_theta, int n_phi) {
    if (n_theta < 2 || n_phi < 4) throw std::invalid_argument("sphere grid too coarse");
    SphereGrid g;
    g.n = 3;
    const GaussRule gl = gauss_legendre(n_theta);  // in z = cos(theta)
    const double wphi = 2.0 * std::numbers::pi / n_phi;
    g.dirs.reserve(static_cast<size_t>(n_theta * n_phi));
    for (int i = 0; i < n_theta; ++i) {
        const double z = gl.x[static_cast<size_t>(i)];
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        for (int j = 0; j < n_phi; ++j) {
            const double phi = wphi * j;
            g.dirs.push_back(Vec::xyz(s * std::cos(phi), s * std::sin(phi), z));
            g.weights.push_back(gl.w[static_cast<size_t>(i)] * wphi);
        }
    }
    return g;
}

const SphereGrid& SphereGrid::standard(int n) {
    static const SphereGrid g2 = SphereGrid::circle(2048);
    static const SphereGrid g3 = SphereGrid::sphere(32, 64);
    if (n == 2) return g2;
    if (n == 3) return g3;
    throw std::invalid_argument("sphere grids exist for n = 2, 3 only");
}

}  // namespace hsymm
