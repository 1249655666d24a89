#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hsymm/rng.hpp"
#include "hsymm/stability.hpp"

using namespace hsymm;
using std::numbers::pi;

namespace {

ConvexBody square2() {
    return ConvexBody::polygon({Vec::xy(-1, -1), Vec::xy(1, -1), Vec::xy(1, 1), Vec::xy(-1, 1)});
}

ConvexBody seeded_polygon(uint64_t seed, int npts = 14) {
    Rng rng(seed);
    std::vector<Vec> pts;
    for (int i = 0; i < npts; ++i) pts.push_back(rng.in_disk());
    std::sort(pts.begin(), pts.end(),
              [](const Vec& a, const Vec& b) { return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y()); });
    std::vector<Vec> h(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    const size_t lo = k + 1;
    for (size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lo && cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return ConvexBody::polygon(h);
}

}  // namespace

TEST_CASE("s_poly") {
    CHECK(s_poly(2, 1.0, 1.0) == doctest::Approx(2.0));
    CHECK(s_poly(1, 3.7, -2.0) == doctest::Approx(1.0));
    CHECK(s_poly(3, 2.0, 3.0) == doctest::Approx(4.0 + 6.0 + 9.0));  // x^2 + xy + y^2
}

TEST_CASE("constants table: exact values at n = 2, 3") {
    const ConstantsTable t = constants_table(2, 1);
    const double beta2 = 1.0 / (80.0 * pi * pi);  // min branch is 3/(pi^2 n(n+2) 2^n) at c = pi
    CHECK(t.omega_n == doctest::Approx(pi).epsilon(1e-15));
    CHECK(t.omega_nm1 == doctest::Approx(2.0).epsilon(1e-15));
    CHECK(t.beta_n == doctest::Approx(beta2).epsilon(1e-14));
    CHECK(t.kappa3 == doctest::Approx(3.0 * beta2 / (4.0 * pi)).epsilon(1e-14));
    CHECK(t.kappa4 == doctest::Approx(t.kappa3 / 2.0).epsilon(1e-14));
    CHECK(t.kappa5 == doctest::Approx(t.kappa4 * std::pow(2.0, -2.5)).epsilon(1e-14));
    // c_1(2,1) = (omega_1/(2 omega_2))^2 * 3 beta_2 / (2^{5/2} * 2) * (7/8)
    CHECK(t.c1 ==
          doctest::Approx(std::pow(1.0 / pi, 2) * 3.0 * beta2 / (std::pow(2.0, 2.5) * 2.0) * 7.0 / 8.0).epsilon(1e-13));
    CHECK(t.exp_gs == doctest::Approx(2.5));
    CHECK(t.exp_sup == doctest::Approx(3.5));
    CHECK(t.exp_energy == doctest::Approx(4.5));
    // at k = 1 the stated and reassembled C2 coincide
    CHECK(t.C2_stated == doctest::Approx(t.C2_reassembled).epsilon(1e-13));

    const ConstantsTable t3 = constants_table(3, 2);
    CHECK(t3.beta_n == doctest::Approx(1.0 / (960.0 * pi)).epsilon(1e-13));
    // the reassembled C2 differs from the stated one by the factor 1/k
    CHECK(t3.C2_reassembled == doctest::Approx(t3.C2_stated / 2.0).epsilon(1e-12));
    CHECK(t3.C2_safe() == doctest::Approx(t3.C2_reassembled));

    CHECK_THROWS_AS(constants_table(2, 2), std::invalid_argument);  // k = n excluded
    CHECK_THROWS_AS(constants_table(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(constants_table(1, 1), std::invalid_argument);
}

TEST_CASE("constants positivity for 2 <= n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= n - 1; ++k) {
            const ConstantsTable t = constants_table(n, k);
            for (const auto& [name, value] : t.entries()) {
                INFO(name << " at n=" << n << " k=" << k);
                CHECK(value > 0.0);
            }
        }
}

TEST_CASE("gs bound: ball saturates, square passes with the documented margin") {
    for (GsForm form : {GsForm::full, GsForm::simplified, GsForm::mean_radii}) {
        const DeficitReport r = gs_bound_check(ConvexBody::ball(Vec::xy(0.2, 0.1), 1.5), 0, 1, form);
        CHECK(r.status == CheckStatus::vacuous);
        CHECK(std::abs(r.lhs) <= 1e-8);
        CHECK(std::abs(r.rhs) <= 1e-12);
    }

    const DeficitReport rmr = gs_bound_check(square2(), 0, 1, GsForm::mean_radii);
    CHECK(rmr.status == CheckStatus::pass);
    CHECK(rmr.lhs == doctest::Approx(4.0 / pi - 1.0).epsilon(1e-7));
    const double beta2 = 1.0 / (80.0 * pi * pi);
    const double alpha = 1.0 - pi / 4.0;
    CHECK(rmr.rhs == doctest::Approx(3.0 * beta2 / (2.0 * pi) * std::pow(alpha, 2.5)).epsilon(1e-6));
    CHECK(rmr.rhs == doctest::Approx(1.29e-5).epsilon(0.01));

    // the simplified and mean-radii forms agree; the full form is evaluated on its own
    const DeficitReport rs = gs_bound_check(square2(), 0, 1, GsForm::simplified);
    CHECK(rs.lhs == doctest::Approx(rmr.lhs).epsilon(1e-12));
    CHECK(rs.rhs == doctest::Approx(rmr.rhs).epsilon(1e-12));
    const DeficitReport rf = gs_bound_check(square2(), 0, 1, GsForm::full);
    CHECK(rf.status == CheckStatus::pass);
    CHECK(rf.lhs >= rf.rhs);

    CHECK_THROWS_AS(gs_bound_check(square2(), 1, 1, GsForm::full), std::invalid_argument);
    CHECK_THROWS_AS(gs_bound_check(square2(), -1, 1, GsForm::full), std::invalid_argument);

    const ConvexBody seg = ConvexBody::polygon({Vec::xy(-1, 0), Vec::xy(1, 0)});
    const DeficitReport rd = gs_bound_check(seg, 0, 1, GsForm::mean_radii);
    CHECK(rd.status == CheckStatus::vacuous);  // W_0 = 0: inequality vacuous
}

TEST_CASE("gs bound on seeded polygons and polytopes, all admissible pairs") {
    for (uint64_t s = 0; s < 100; ++s) {
        const ConvexBody b = seeded_polygon(s);
        for (GsForm form : {GsForm::full, GsForm::simplified, GsForm::mean_radii}) {
            const DeficitReport r = gs_bound_check(b, 0, 1, form);
            CHECK(r.status != CheckStatus::fail);
        }
    }
    for (uint64_t s = 0; s < 30; ++s) {
        Rng rng(s + 71);
        std::vector<Vec> pts;
        for (int i = 0; i < 16; ++i) pts.push_back(rng.in_ball());
        const ConvexBody b = ConvexBody::polytope3d(pts);
        for (int i = 0; i < 2; ++i)
            for (int j = i + 1; j <= 2; ++j) {
                CHECK(gs_bound_check(b, i, j, GsForm::mean_radii).status != CheckStatus::fail);
                CHECK(gs_bound_check(b, i, j, GsForm::simplified).status != CheckStatus::fail);
                CHECK(gs_bound_check(b, i, j, GsForm::full).status != CheckStatus::fail);
            }
    }
}

TEST_CASE("propagation of the Hausdorff asymmetry") {
    const ConvexBody sq = square2();
    // inner = outer: conclusion reduces to d_H(Omega, B_R) >= d_H(Omega, B_R)/2
    const DeficitReport same = propagation_check(sq, sq);
    CHECK(same.status == CheckStatus::pass);
    CHECK(same.margin >= 0.0);

    // homothetic inner body shrunk within the hypothesis threshold
    const double dh = hausdorff_asymmetry(sq).d_h_to_steiner_ball;
    const double eps = 0.9 * dh / (2.0 * 4.0 * 2.0 * std::sqrt(2.0));  // 2(n+2) D
    const DeficitReport ok = propagation_check(sq, homothety(sq, 1.0 - eps, Vec::xy(0, 0)));
    CHECK(ok.status == CheckStatus::pass);
    CHECK(ok.margin >= 0.0);

    // hypothesis violated: reported as such, not as a failure
    const DeficitReport far = propagation_check(sq, homothety(sq, 0.5, Vec::xy(0, 0)));
    CHECK(far.status == CheckStatus::vacuous);
    CHECK(far.note == "hypothesis not met");

    // outer ball: degenerate pass
    const ConvexBody ball = ConvexBody::ball(Vec::xy(0, 0), 1.0);
    const DeficitReport bb = propagation_check(ball, ball);
    CHECK(bb.status == CheckStatus::vacuous);

    CHECK_THROWS_AS(propagation_check(sq, homothety(sq, 1.5, Vec::xy(0, 0))), std::invalid_argument);
}

TEST_CASE("propagation quantifier on seeded pairs meeting the hypothesis") {
    int checked = 0;
    for (uint64_t s = 0; s < 60; ++s) {
        const ConvexBody outer = seeded_polygon(s, 10);
        const AsymmetryRecord a = hausdorff_asymmetry(outer);
        if (a.d_h_to_steiner_ball <= 1e-9) continue;
        const double D = shape_summary(outer).diameter;
        const double eps = 0.9 * a.d_h_to_steiner_ball / (2.0 * (2 + 2.0) * D);
        const DeficitReport r =
            propagation_check(outer, homothety(outer, 1.0 - eps, shape_summary(outer).steiner_point));
        CHECK(r.status == CheckStatus::pass);
        CHECK(r.margin >= 0.0);
        ++checked;
    }
    CHECK(checked >= 50);
}

TEST_CASE("half power bound") {
    const PowerBound eq = half_power_bound(2.7, 0.0);
    CHECK(eq.lhs == doctest::Approx(eq.rhs));
    CHECK(eq.pass);

    const PowerBound b = half_power_bound(1.0, 1.0);
    CHECK(b.lhs == doctest::Approx(2.0));
    CHECK(b.rhs == doctest::Approx(1.5));
    CHECK(b.pass);

    // exhaustive grid: alpha in (0, 5], x in [0, 1]
    for (int i = 1; i <= 100; ++i)
        for (int j = 0; j <= 100; ++j) {
            const PowerBound g = half_power_bound(5.0 * i / 100.0, j / 100.0);
            CHECK(g.pass);
            if (j > 0) CHECK(g.lhs > g.rhs);  // equality only at x = 0
        }

    CHECK_THROWS_AS(half_power_bound(0.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(half_power_bound(1.0, -0.1), std::invalid_argument);
    CHECK_THROWS_AS(half_power_bound(1.0, 1.1), std::invalid_argument);
}
