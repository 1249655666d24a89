#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hsymm/convex_core.hpp"
#include "hsymm/symmetrize.hpp"

namespace hsymm {

// k-th elementary symmetric polynomial of the eigenvalues, 1 <= k <= n,
// via the stable coefficient recursion.
double s_k_eval(std::span<const double> eigenvalues, int k);

// H_k(u; Omega) = 1/(k+1) integral_Omega (-u) S_k(D^2 u). Closed form for the
// quadratic family (S_k constant), polar quadrature for radial functions.
// The cone family is rejected (distributional Hessian).
double hk_energy(const ConvexTestFunction& u, int k, int quad_res = 256);

// Same value through explicit tensor/polar quadrature (cross-check path).
double hk_energy_quadrature(const ConvexTestFunction& u, int k, int quad_res = 256);

// Positive source term on a convex domain.
class SourceField {
public:
    enum class Family { Constant, RadialMonotone, General };

    static SourceField constant(const ConvexBody& domain, double c);
    static SourceField radial(const ConvexBody& ball_domain, std::function<double(double)> f);
    static SourceField general(const ConvexBody& domain, std::function<double(const Vec&)> f);

    Family family() const { return family_; }
    const ConvexBody& domain() const { return domain_; }
    double constant_value() const { return c_; }
    double radial_value(double r) const { return fr_(r); }
    const std::function<double(double)>& radial_fn() const { return fr_; }
    double eval(const Vec& x) const;
    double l1_norm() const;  // integral over the domain

private:
    SourceField() = default;
    Family family_ = Family::Constant;
    ConvexBody domain_ = ConvexBody::ball(Vec::xy(0, 0), 1.0);
    double c_ = 1.0;
    std::function<double(double)> fr_;
    std::function<double(const Vec&)> fg_;
};

// Decreasing radial rearrangement on the ball of the same volume;
// equimeasurable with f: |{f > t}| = |{f0 > t}|.
RadialProfile schwarz_rearrange(const SourceField& f, int r_grid = 1024);

// Radial source for the solver: a callable plus quadrature breakpoints
// (panel edges are aligned with them, so jumps are integrated exactly).
struct RadialSource {
    std::function<double(double)> f;
    std::vector<double> breakpoints;

    RadialSource(std::function<double(double)> fn, std::vector<double> brk = {})
        : f(std::move(fn)), breakpoints(std::move(brk)) {}
    RadialSource(const RadialProfile& p);  // evaluates the interpolant
};

// Solution of the radial k-Hessian problem on the centered ball of radius R:
//   (C(n-1,k-1)/k) r^{1-n} (r^{n-k} (u')^k)' = f0,  u(R) = 0.
// Grid is sine-spaced in r (uniform in t with r = R sin t).
struct RadialSolution {
    int n = 2, k = 1;
    double R = 1.0;
    std::vector<double> r, u, du;

    double value(double rr) const { return interp_(rr); }
    double derivative(double rr) const { return interp_.derivative(rr); }
    double minimum() const { return u.front(); }
    // max |operator(u0) - f0| / sup f0 over interior nodes (breakpoint
    // neighborhoods excluded)
    double max_residual = 0.0;

    RadialProfile profile() const { return RadialProfile(r, u); }
    MonotoneCubic interp_;
};

RadialSolution radial_solution(const RadialSource& f0, double R, int n, int k, int panels = 2048);

// First eigenvalue of the radial k-Hessian on the centered ball of radius R:
//   (C(n-1,k-1)/k) r^{1-n} (r^{n-k} (u')^k)' = sigma (-u)^k,  u(0) = -1, u(R) = 0,
// by shooting with bisection on sigma. `rayleigh` is the Rayleigh quotient of
// the computed profile (consistency value).
struct RadialEigenResult {
    double sigma = 0.0;
    double rayleigh = 0.0;
    std::vector<double> r, u, du;
    RadialProfile profile() const { return RadialProfile(r, u); }
};

RadialEigenResult radial_eigen(int n, int k, double R, int steps = 4096);

// k-torsional rigidity of a ball or ellipsoid through the explicit quadratic
// solution of S_k(D^2 u) = 1.
double torsional_rigidity(const ConvexBody& body, int k);

// Smallest Dirichlet eigenvalue of the 5-point Laplacian on a 2D body,
// Shortley-Weller boundary stencils, inverse power iteration, Richardson
// extrapolation over grids h and h/2.
double fd_laplace_eigen(const ConvexBody& body, double h);

}  // namespace hsymm
