#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hsymm/quermass.hpp"
#include "hsymm/symmetrize.hpp"

using namespace hsymm;
using std::numbers::pi;

namespace {

ConvexBody square2() {
    return ConvexBody::polygon({Vec::xy(-1, -1), Vec::xy(1, -1), Vec::xy(1, 1), Vec::xy(-1, 1)});
}

ConvexBody ellipse(double a) { return ConvexBody::ellipsoid(Vec::xy(0, 0), {a, 1.0 / a}); }

ConvexTestFunction radial_quadratic(double R, int n, double depth = 0.5) {
    // p(r) = depth (r^2/R^2 - 1)
    return ConvexTestFunction::radial_on_ball(
        ConvexBody::ball(Vec::zero(n), R), [depth, R](double r) { return depth * (r * r / (R * R) - 1.0); },
        [depth, R](double r) { return 2.0 * depth * r / (R * R); },
        [depth, R](double) { return 2.0 * depth / (R * R); });
}

}  // namespace

TEST_CASE("test function construction and evaluation") {
    const ConvexTestFunction q = ConvexTestFunction::quadratic_on_ellipsoid(ellipse(1.2), 0.7);
    CHECK(q.minimum() == doctest::Approx(-0.7));
    CHECK(q(Vec::xy(0, 0)) == doctest::Approx(-0.7));
    CHECK(q(Vec::xy(1.2, 0)) == doctest::Approx(0.0).epsilon(1e-14));

    const ConvexTestFunction c = ConvexTestFunction::cone_over_body(square2(), -2.0, Vec::xy(0, 0));
    CHECK(c(Vec::xy(0, 0)) == doctest::Approx(-2.0));
    CHECK(c(Vec::xy(1, 1)) == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(c(Vec::xy(0.5, 0)) == doctest::Approx(-1.0).epsilon(1e-9));

    CHECK_THROWS_AS(ConvexTestFunction::quadratic_on_ellipsoid(square2(), 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ConvexTestFunction::quadratic_on_ellipsoid(ellipse(1.2), -1.0), std::invalid_argument);
    CHECK_THROWS_AS(ConvexTestFunction::cone_over_body(square2(), 1.0, Vec::xy(0, 0)), std::invalid_argument);
    CHECK_THROWS_AS(ConvexTestFunction::cone_over_body(square2(), -1.0, Vec::xy(5, 0)), std::invalid_argument);
}

TEST_CASE("sublevel profile: exact homothets") {
    // cone over the square at mu = m/2: half-scale square
    const ConvexTestFunction cone = ConvexTestFunction::cone_over_body(square2(), -1.0, Vec::xy(0, 0));
    CHECK(cone.sublevel_scale(-0.5) == doctest::Approx(0.5).epsilon(1e-14));
    const ConvexBody half = cone.sublevel_body(-0.5);
    CHECK(mean_radius(half, 0) == doctest::Approx(0.5 * mean_radius(square2(), 0)).epsilon(1e-12));
    CHECK(mean_radius(half, 1) == doctest::Approx(0.5 * mean_radius(square2(), 1)).epsilon(1e-12));

    // quadratic on the area-pi ellipse at mu = -c/2: scale sqrt(1/2)
    const double cc = 0.47;
    const ConvexTestFunction quad = ConvexTestFunction::quadratic_on_ellipsoid(ellipse(1.2), cc);
    CHECK(quad.sublevel_scale(-cc / 2.0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(mean_radius(quad.sublevel_body(-cc / 2.0), 0) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));

    const SublevelProfile prof = sublevel_profile(quad, 0, 128);
    CHECK(prof.mu.back() == doctest::Approx(0.0));
    CHECK(prof.zeta_k.back() == doctest::Approx(mean_radius(ellipse(1.2), 0)).epsilon(1e-12));
    for (size_t i = 1; i < prof.mu.size(); ++i) {
        CHECK(prof.mu[i] > prof.mu[i - 1]);
        CHECK(prof.zeta_k[i] >= prof.zeta_k[i - 1]);
        // nested: support dominance at a few directions
        for (int d = 0; d < 4; ++d) {
            const Vec u = Vec::xy(std::cos(d * 0.7), std::sin(d * 0.7));
            CHECK(prof.bodies[i - 1].support_hom(u) <= prof.bodies[i].support_hom(u) + 1e-12);
        }
    }

    CHECK_THROWS_AS(sublevel_profile(quad, 2, 128), std::invalid_argument);
    CHECK_THROWS_AS(sublevel_profile(quad, 0, 32), std::invalid_argument);
}

TEST_CASE("symmetrand: radial functions are fixed points") {
    const ConvexTestFunction u = radial_quadratic(1.0, 2);
    const RadialProfile s0 = symmetrand(u, 0, 256);
    const RadialProfile s1 = symmetrand(u, 1, 256);
    for (int i = 0; i <= 64; ++i) {
        const double r = i / 64.0;
        CHECK(s0(r) == doctest::Approx(u.radial_eval(r)).epsilon(1e-10));
        CHECK(s1(r) == doctest::Approx(u.radial_eval(r)).epsilon(1e-10));
    }
    CHECK(!s0.regularized());

    // symmetrand of a symmetrand output reproduces the profile
    const ConvexTestFunction again = symmetrand_function(u, 0);
    const RadialProfile s2 = symmetrand(again, 0, 256);
    for (int i = 0; i <= 64; ++i) {
        const double r = i / 64.0;
        CHECK(s2(r) == doctest::Approx(s0(r)).epsilon(1e-8));
    }
}

TEST_CASE("symmetrand closed forms: quadratic on ellipse, cone on square") {
    const double cc = 0.46851;
    const ConvexTestFunction quad = ConvexTestFunction::quadratic_on_ellipsoid(ellipse(1.2), cc);
    const RadialProfile s = symmetrand(quad, 0, 2048);
    CHECK(s.radius() == doctest::Approx(1.0).epsilon(1e-12));  // zeta_0 of an area-pi ellipse
    for (int i = 0; i <= 100; ++i) {
        const double r = i / 100.0;
        CHECK(s(r) == doctest::Approx(cc * (r * r - 1.0)).epsilon(1e-8));
    }
    CHECK(s(0.0) == doctest::Approx(quad.minimum()));
    CHECK(std::abs(s(s.radius())) < 1e-12);

    const ConvexTestFunction cone = ConvexTestFunction::cone_over_body(square2(), -1.5, Vec::xy(0, 0));
    const double z0 = 2.0 / std::sqrt(pi);
    const RadialProfile sc = symmetrand(cone, 0, 2048);
    CHECK(sc.radius() == doctest::Approx(z0).epsilon(1e-12));
    for (int i = 0; i <= 100; ++i) {
        const double r = z0 * i / 100.0;
        CHECK(sc(r) == doctest::Approx(-1.5 * (1.0 - r * std::sqrt(pi) / 2.0)).epsilon(1e-8));
    }

    // closed-form symmetrand function agrees with the grid inversion
    const ConvexTestFunction sf = symmetrand_function(quad, 0);
    for (int i = 0; i <= 100; ++i) {
        const double r = i / 100.0;
        CHECK(sf.radial_eval(r) == doctest::Approx(s(r)).epsilon(1e-8));
    }
}

TEST_CASE("symmetrand ordering and domain nesting") {
    // 2D: u*_0 >= u*_1 on the smaller ball
    const ConvexTestFunction quad = ConvexTestFunction::quadratic_on_ellipsoid(ellipse(1.4), 0.8);
    const RadialProfile s0 = symmetrand(quad, 0, 2048);
    const RadialProfile s1 = symmetrand(quad, 1, 2048);
    CHECK(s0.radius() <= s1.radius() + 1e-12);
    for (int i = 0; i <= 400; ++i) {
        const double r = s0.radius() * i / 400.0;
        CHECK(s0(r) >= s1(r) - 1e-9);
    }

    // 3D ellipsoid: full chain
    const ConvexBody E3 = ConvexBody::ellipsoid(Vec::xyz(0, 0, 0), {1.3, 1.0, 1.0 / 1.3});
    const ConvexTestFunction q3 = ConvexTestFunction::quadratic_on_ellipsoid(E3, 0.6);
    const RadialProfile t0 = symmetrand(q3, 0, 1024);
    const RadialProfile t1 = symmetrand(q3, 1, 1024);
    const RadialProfile t2 = symmetrand(q3, 2, 1024);
    CHECK(t0.radius() <= t1.radius() + 1e-12);
    CHECK(t1.radius() <= t2.radius() + 1e-12);
    for (int i = 0; i <= 200; ++i) {
        const double r = t0.radius() * i / 200.0;
        CHECK(t0(r) >= t1(r) - 1e-9);
        CHECK(t1(r) >= t2(r) - 1e-9);
    }

    // cone family ordering
    const ConvexTestFunction cone = ConvexTestFunction::cone_over_body(square2(), -1.0, Vec::xy(0, 0));
    const RadialProfile c0 = symmetrand(cone, 0, 1024);
    const RadialProfile c1 = symmetrand(cone, 1, 1024);
    for (int i = 0; i <= 200; ++i) {
        const double r = c0.radius() * i / 200.0;
        CHECK(c0(r) >= c1(r) - 1e-9);
    }
}

TEST_CASE("measure comparison |{-u > t}| <= |{-u*_{k-1} > t}|") {
    const double cc = 0.7;
    const ConvexTestFunction quad = ConvexTestFunction::quadratic_on_ellipsoid(ellipse(1.3), cc);
    {
        const ConvexTestFunction us = symmetrand_function(quad, 0);
        for (int i = 1; i < 16; ++i) {
            const double t = cc * i / 16.0;
            // {-u > t} = sublevel at mu = -t
            const double area_u = quermassintegrals(quad.sublevel_body(-t)).w[0];
            const double area_us = quermassintegrals(us.sublevel_body(-t)).w[0];
            CHECK(area_u <= area_us + 1e-10);
        }
    }
    // 3D, order 2 (the symmetrand preserving W_1)
    const ConvexBody E3 = ConvexBody::ellipsoid(Vec::xyz(0, 0, 0), {1.3, 1.0, 1.0 / 1.3});
    const ConvexTestFunction q3 = ConvexTestFunction::quadratic_on_ellipsoid(E3, cc);
    const ConvexTestFunction us3 = symmetrand_function(q3, 1);
    for (int i = 1; i < 16; ++i) {
        const double t = cc * i / 16.0;
        const double vol_u = quermassintegrals(q3.sublevel_body(-t)).w[0];
        const double vol_us = quermassintegrals(us3.sublevel_body(-t)).w[0];
        CHECK(vol_u <= vol_us + 1e-10);
    }
}

TEST_CASE("symmetrands are nondecreasing and convex along radii") {
    const ConvexTestFunction quad = ConvexTestFunction::quadratic_on_ellipsoid(ellipse(1.35), 0.9);
    const ConvexTestFunction cone = ConvexTestFunction::cone_over_body(square2(), -1.2, Vec::xy(0, 0));
    for (const ConvexTestFunction* u : {&quad, &cone}) {
        for (int k = 0; k <= 1; ++k) {
            const RadialProfile s = symmetrand(*u, k, 1024);
            const double R = s.radius(), h = R / 256.0;
            for (int i = 1; i < 255; ++i) {
                const double r = i * h;
                CHECK(s(r + h) >= s(r) - 1e-12);
                CHECK(s(r + h) - 2.0 * s(r) + s(r - h) >= -1e-8 * R);  // midpoint convexity
            }
        }
    }
}

TEST_CASE("cone minorant comparisons") {
    const ConvexTestFunction cone = ConvexTestFunction::cone_over_body(square2(), -1.0, Vec::xy(0, 0));
    const DeficitReport r1 = cone_minorant_check(cone, 0);
    CHECK(r1.status == CheckStatus::pass);

    const ConvexTestFunction qb =
        ConvexTestFunction::quadratic_on_ellipsoid(ConvexBody::ball(Vec::xy(0, 0), 1.0), 0.5);
    CHECK(cone_minorant_check(qb, 0).status == CheckStatus::pass);
    CHECK(cone_minorant_check(qb, 1).status == CheckStatus::pass);

    const ConvexTestFunction qe = ConvexTestFunction::quadratic_on_ellipsoid(ellipse(1.2), 0.5);
    CHECK(cone_minorant_check(qe, 0).status == CheckStatus::pass);
    CHECK(cone_minorant_check(qe, 1).status == CheckStatus::pass);
}
