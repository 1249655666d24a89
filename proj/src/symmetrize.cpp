#include "hsymm/symmetrize.hpp"

#include <cmath>
#include <stdexcept>

#include "hsymm/quermass.hpp"
#include "hsymm/rng.hpp"

namespace hsymm {

RadialProfile::RadialProfile(std::vector<double> r, std::vector<double> values, bool regularized)
    : interp_(std::move(r), std::move(values)), regularized_(regularized) {}

namespace {

// largest t >= 0 with `from + t dir` still inside the body (bracket + bisection)
double ray_exit(const ConvexBody& body, const Vec& from, const Vec& dir) {
    double lo = 0.0, hi = 1.0;
    while (body.contains(from + dir * hi, 1e-14) && hi < 1e12) hi *= 2.0;
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        (body.contains(from + dir * mid, 1e-14) ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

Vec boundary_point(const ConvexBody& body, const Vec& from, const Vec& dir) {
    return from + dir * ray_exit(body, from, dir);
}

}  // namespace

double ConvexTestFunction::operator()(const Vec& x) const {
    switch (family_) {
        case Family::QuadraticOnEllipsoid: {
            const Vec y = x - min_point_;
            double q = 0.0;
            if (const auto* b = domain_.as_ball()) {
                q = y.norm2() / (b->radius * b->radius);
            } else {
                const auto* e = domain_.as_ellipsoid();
                for (int i = 0; i < domain_.dim(); ++i) {
                    const double t = y[i] / e->a[static_cast<size_t>(i)];
                    q += t * t;
                }
            }
            return coeff_ * (q - 1.0);
        }
        case Family::ConeOverBody: {
            const Vec y = x - min_point_;
            const double r = y.norm();
            if (r == 0.0) return m_;
            const double t = ray_exit(domain_, min_point_, y * (1.0 / r));  // gauge = r / t
            return m_ * (1.0 - r / t);
        }
        case Family::RadialOnBall:
            return p_((x - min_point_).norm());
    }
    throw std::logic_error("unreachable");
}

double ConvexTestFunction::sublevel_scale(double mu) const {
    if (mu < m_ || mu > 0.0) throw std::invalid_argument("sublevel_scale: mu outside [m, 0]");
    switch (family_) {
        case Family::QuadraticOnEllipsoid:
            return std::sqrt(std::max(0.0, 1.0 + mu / coeff_));
        case Family::ConeOverBody:
            return 1.0 - mu / m_;
        case Family::RadialOnBall: {
            // invert the increasing profile by bisection
            const double R = domain_.as_ball()->radius;
            if (mu >= 0.0) return 1.0;
            double lo = 0.0, hi = R;
            for (int i = 0; i < 100; ++i) {
                const double mid = 0.5 * (lo + hi);
                (p_(mid) < mu ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi) / R;
        }
    }
    throw std::logic_error("unreachable");
}

ConvexBody ConvexTestFunction::sublevel_body(double mu) const {
    const double s = sublevel_scale(mu);
    if (!(s > 0.0)) throw std::domain_error("sublevel_body: empty sublevel set at mu = m");
    return homothety(domain_, s, min_point_);
}

void ConvexTestFunction::validate() const {
    if (!(m_ < 0.0)) throw std::invalid_argument("test function must have negative minimum");
    // boundary vanishing and bounds on a direction fan
    const int n = domain_.dim();
    Rng rng(0x5eedul);
    for (int i = 0; i < 16; ++i) {
        Vec d = n == 2 ? Vec::xy(std::cos(i * 0.39269908169872414), std::sin(i * 0.39269908169872414))
                       : rng.in_ball().normalized();
        const Vec b = boundary_point(domain_, min_point_, d);
        if (std::abs((*this)(b)) > 1e-8)
            throw std::invalid_argument("test function does not vanish on the domain boundary");
    }
    // midpoint convexity and lower bound on random pairs
    auto sample = [&]() {
        const Vec d = (n == 2 ? Vec::xy(rng.uniform(-1, 1), rng.uniform(-1, 1)) : rng.in_ball()).normalized();
        return min_point_ + (boundary_point(domain_, min_point_, d) - min_point_) * rng.uniform();
    };
    for (int i = 0; i < 64; ++i) {
        const Vec p = sample();
        const Vec q = sample();
        if ((*this)((p + q) * 0.5) > 0.5 * ((*this)(p) + (*this)(q)) + 1e-9)
            throw std::invalid_argument("test function violates midpoint convexity");
        if ((*this)(p) < m_ - 1e-9) throw std::invalid_argument("test function dips below its minimum");
    }
}

ConvexTestFunction ConvexTestFunction::quadratic_on_ellipsoid(const ConvexBody& domain, double coeff) {
    if (!(coeff > 0.0)) throw std::invalid_argument("quadratic_on_ellipsoid: coefficient must be positive");
    if (domain.kind() != BodyKind::Ball && domain.kind() != BodyKind::Ellipsoid)
        throw std::invalid_argument("quadratic_on_ellipsoid: domain must be a ball or ellipsoid");
    ConvexTestFunction u;
    u.family_ = Family::QuadraticOnEllipsoid;
    u.domain_ = domain;
    u.coeff_ = coeff;
    u.m_ = -coeff;
    u.min_point_ = domain.as_ball() ? domain.as_ball()->center : domain.as_ellipsoid()->center;
    u.validate();
    return u;
}

ConvexTestFunction ConvexTestFunction::cone_over_body(const ConvexBody& base, double apex_value, const Vec& apex) {
    if (!(apex_value < 0.0)) throw std::invalid_argument("cone_over_body: apex value must be negative");
    if (!base.contains(apex, 1e-12)) throw std::invalid_argument("cone_over_body: apex must lie in the base");
    ConvexTestFunction u;
    u.family_ = Family::ConeOverBody;
    u.domain_ = base;
    u.m_ = apex_value;
    u.min_point_ = apex;
    u.validate();
    return u;
}

ConvexTestFunction ConvexTestFunction::radial_on_ball(const ConvexBody& ball_domain, std::function<double(double)> p,
                                                      std::function<double(double)> dp,
                                                      std::function<double(double)> d2p) {
    const auto* b = ball_domain.as_ball();
    if (!b) throw std::invalid_argument("radial_on_ball: domain must be a ball");
    ConvexTestFunction u;
    u.family_ = Family::RadialOnBall;
    u.domain_ = ball_domain;
    u.p_ = std::move(p);
    u.dp_ = std::move(dp);
    u.d2p_ = std::move(d2p);
    u.m_ = u.p_(0.0);
    u.min_point_ = b->center;
    u.validate();
    return u;
}

SublevelProfile sublevel_profile(const ConvexTestFunction& u, int k, int grid_size) {
    const int n = u.domain().dim();
    if (k < 0 || k > n - 1) throw std::invalid_argument("sublevel_profile: need 0 <= k <= n-1");
    if (grid_size < 64) throw std::invalid_argument("sublevel_profile: grid_size >= 64 required");
    const double m = u.minimum();
    SublevelProfile out;
    out.k = k;
    out.mu.reserve(static_cast<size_t>(grid_size));
    for (int i = 1; i <= grid_size; ++i) {
        const double s = static_cast<double>(i) / grid_size;
        const double mu = m * (1.0 - s * s);
        const ConvexBody body = u.sublevel_body(mu);
        out.mu.push_back(mu);
        out.zeta_k.push_back(mean_radius(body, k));
        out.bodies.push_back(body);
    }
    return out;
}

RadialProfile symmetrand(const ConvexTestFunction& u, int k, int grid_size) {
    const SublevelProfile prof = sublevel_profile(u, k, grid_size);
    std::vector<double> r{0.0}, v{u.minimum()};
    bool regularized = false;
    for (size_t i = 0; i < prof.mu.size(); ++i) {
        if (prof.zeta_k[i] <= r.back() + 1e-14 * (1.0 + r.back())) {
            regularized = true;  // flat stretch: keep the left-continuous value
            continue;
        }
        r.push_back(prof.zeta_k[i]);
        v.push_back(prof.mu[i]);
    }
    return RadialProfile(std::move(r), std::move(v), regularized);
}

ConvexTestFunction symmetrand_function(const ConvexTestFunction& u, int k) {
    const int n = u.domain().dim();
    const double zeta = mean_radius(u.domain(), k);
    if (!(zeta > 0.0)) throw std::domain_error("symmetrand_function: degenerate domain");
    const ConvexBody ball = ConvexBody::ball(Vec::zero(n), zeta);
    switch (u.family()) {
        case ConvexTestFunction::Family::QuadraticOnEllipsoid: {
            const double c = u.coefficient();
            return ConvexTestFunction::radial_on_ball(
                ball, [c, zeta](double r) { return c * ((r / zeta) * (r / zeta) - 1.0); },
                [c, zeta](double r) { return 2.0 * c * r / (zeta * zeta); },
                [c, zeta](double) { return 2.0 * c / (zeta * zeta); });
        }
        case ConvexTestFunction::Family::ConeOverBody: {
            const double m = u.minimum();
            return ConvexTestFunction::radial_on_ball(
                ball, [m, zeta](double r) { return m * (1.0 - r / zeta); },
                [m, zeta](double) { return -m / zeta; }, [](double) { return 0.0; });
        }
        case ConvexTestFunction::Family::RadialOnBall:
            // all mean radii of balls coincide with the radius
            return ConvexTestFunction::radial_on_ball(
                ConvexBody::ball(Vec::zero(n), u.domain().as_ball()->radius), u.radial_fn(), u.radial_d1_fn(),
                u.radial_d2_fn());
    }
    throw std::logic_error("unreachable");
}

DeficitReport cone_minorant_check(const ConvexTestFunction& u, int k) {
    const ConvexBody& dom = u.domain();
    const int n = dom.dim();
    const double m = u.minimum();
    const ConvexTestFunction cone = ConvexTestFunction::cone_over_body(dom, m, u.min_point());

    DeficitReport rep;
    rep.name = "cone_minorant";
    rep.n = n;
    rep.k = k;

    // pointwise u <= cone on seeded samples
    Rng rng(0xc0defeedul);
    double worst_point = 0.0;
    for (int i = 0; i < 64; ++i) {
        Vec d = n == 2 ? Vec::xy(rng.uniform(-1, 1), rng.uniform(-1, 1)) : rng.in_ball();
        if (d.norm() < 1e-9) continue;
        d = d.normalized();
        const Vec x = u.min_point() + (boundary_point(dom, u.min_point(), d) - u.min_point()) * rng.uniform();
        worst_point = std::max(worst_point, u(x) - cone(x));
    }

    const double zeta = mean_radius(dom, k);
    const double diam = shape_summary(dom).diameter;
    const SublevelProfile prof = sublevel_profile(u, k, 256);
    double worst_zeta = 0.0, worst_dh = 0.0;
    for (size_t i = 0; i < prof.mu.size(); ++i) {
        const double mu = prof.mu[i];
        const double lower = (1.0 - mu / m) * zeta;
        worst_zeta = std::max(worst_zeta, lower - prof.zeta_k[i]);
        const ConvexBody cmu = homothety(dom, 1.0 - mu / m, u.min_point());
        worst_dh = std::max(worst_dh, hausdorff_distance(dom, cmu) - (mu / m) * diam);
    }
    rep.constants.emplace_back("max(u - cone)", worst_point);
    rep.constants.emplace_back("max zeta shortfall", worst_zeta);
    rep.constants.emplace_back("max d_H excess", worst_dh);
    rep.lhs = -std::max({worst_point, worst_zeta, worst_dh});
    rep.rhs = 0.0;
    rep.margin = rep.lhs;
    rep.status = rep.margin >= -1e-8 ? CheckStatus::pass : CheckStatus::fail;
    return rep;
}

}  // namespace hsymm
