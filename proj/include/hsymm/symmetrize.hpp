#pragma once

#include <functional>
#include <vector>

#include "hsymm/convex_core.hpp"
#include "hsymm/interpolation.hpp"
#include "hsymm/report.hpp"

namespace hsymm {

// Radial function on [0, R] stored on a grid with monotone piecewise-cubic
// interpolation. Used for symmetrands, radial solutions and rearranged
// sources.
class RadialProfile {
public:
    RadialProfile() = default;
    RadialProfile(std::vector<double> r, std::vector<double> values, bool regularized = false);

    double radius() const { return interp_.back(); }
    double operator()(double r) const { return interp_(r); }
    double derivative(double r) const { return interp_.derivative(r); }
    const std::vector<double>& grid() const { return interp_.grid(); }
    const std::vector<double>& values() const { return interp_.values(); }
    // true when a flat stretch of the inverted map had to be dropped
    bool regularized() const { return regularized_; }

private:
    MonotoneCubic interp_;
    bool regularized_ = false;
};

// Convex function u < 0 on a convex domain, vanishing on the boundary, from
// one of the three families with exact sublevel sets.
class ConvexTestFunction {
public:
    enum class Family { QuadraticOnEllipsoid, ConeOverBody, RadialOnBall };

    // u = coeff (q - 1) with q the ellipsoid coordinate; domain Ball or Ellipsoid
    static ConvexTestFunction quadratic_on_ellipsoid(const ConvexBody& domain, double coeff);
    // graph is the cone of base `base` and apex value m < 0 at `apex`
    static ConvexTestFunction cone_over_body(const ConvexBody& base, double apex_value, const Vec& apex);
    // u(x) = p(|x - center|) with p increasing, p(R) = 0; dp, d2p are its derivatives
    static ConvexTestFunction radial_on_ball(const ConvexBody& ball_domain, std::function<double(double)> p,
                                             std::function<double(double)> dp, std::function<double(double)> d2p);

    Family family() const { return family_; }
    const ConvexBody& domain() const { return domain_; }
    double minimum() const { return m_; }
    const Vec& min_point() const { return min_point_; }
    double operator()(const Vec& x) const;

    // homothety scale of the exact sublevel set {u < mu}
    double sublevel_scale(double mu) const;
    ConvexBody sublevel_body(double mu) const;

    double coefficient() const { return coeff_; }  // quadratic family
    double radial_eval(double r) const { return p_(r); }
    double radial_d1(double r) const { return dp_(r); }
    double radial_d2(double r) const { return d2p_(r); }
    const std::function<double(double)>& radial_fn() const { return p_; }
    const std::function<double(double)>& radial_d1_fn() const { return dp_; }
    const std::function<double(double)>& radial_d2_fn() const { return d2p_; }

private:
    ConvexTestFunction() = default;
    void validate() const;

    Family family_ = Family::QuadraticOnEllipsoid;
    ConvexBody domain_ = ConvexBody::ball(Vec::xy(0, 0), 1.0);
    double m_ = -1.0;
    Vec min_point_ = Vec::xy(0, 0);
    double coeff_ = 1.0;
    std::function<double(double)> p_, dp_, d2p_;
};

// mu |-> (sublevel body, zeta_k) sampled uniformly in the homothety scale
// sqrt(1 - mu/m); mu runs up to 0 where the sublevel set is the full domain.
struct SublevelProfile {
    int k = 0;
    std::vector<double> mu;
    std::vector<double> zeta_k;
    std::vector<ConvexBody> bodies;
};

SublevelProfile sublevel_profile(const ConvexTestFunction& u, int k, int grid_size = 256);

// The radial function on [0, zeta_k(Omega)] obtained by inverting
// mu |-> zeta_k(Omega(mu)); value m at r = 0 by continuity.
RadialProfile symmetrand(const ConvexTestFunction& u, int k, int grid_size = 2048);

// Exact symmetrand as a radial test function on the centered ball of radius
// zeta_k(Omega) (closed form for the builtin families).
ConvexTestFunction symmetrand_function(const ConvexTestFunction& u, int k);

// Cone comparisons: u <= cone pointwise, zeta_k(Omega(mu)) >= (1 - mu/m) zeta_k(Omega),
// d_H(Omega, C(mu)) <= (mu/m) D(Omega).
DeficitReport cone_minorant_check(const ConvexTestFunction& u, int k);

}  // namespace hsymm
