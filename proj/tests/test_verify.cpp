#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hsymm/quermass.hpp"
#include "hsymm/verify.hpp"

using namespace hsymm;
using std::numbers::pi;

namespace {

ConvexBody ellipse(double a) { return ConvexBody::ellipsoid(Vec::xy(0, 0), {a, 1.0 / a}); }

double ellipse_c(double a) { return 1.0 / (1.0 / (a * a) + a * a); }  // (1/a^2 + 1/b^2)^{-1}, b = 1/a

ConvexTestFunction quadratic_with_unit_source(const ConvexBody& body, int k, double fconst) {
    std::vector<double> invsq;
    if (const auto* b = body.as_ball())
        invsq.assign(static_cast<size_t>(body.dim()), 1.0 / (b->radius * b->radius));
    else
        for (double a : body.as_ellipsoid()->a) invsq.push_back(1.0 / (a * a));
    const double kap = 0.5 * std::pow(fconst / s_k_eval(invsq, k), 1.0 / k);
    return ConvexTestFunction::quadratic_on_ellipsoid(body, kap);
}

}  // namespace

TEST_CASE("ball saturation across every report") {
    for (double R : {0.5, 1.0, 2.0}) {
        for (int n : {2, 3}) {
            const ConvexBody ball = ConvexBody::ball(Vec::zero(n), R);
            for (int k = 1; k <= n - 1; ++k) {
                const ConvexTestFunction u = quadratic_with_unit_source(ball, k, 2.0);
                const SourceField f = SourceField::constant(ball, 2.0);
                const DeficitReport reps[] = {polya_szego_report(u, k),      talenti_gap_report(ball, f, k),
                                              hk_comparison_report(ball, f, k), faber_krahn_report(ball, k),
                                              saint_venant_report(ball, k),  pointwise_tso_check(ball, f, k)};
                for (const DeficitReport& r : reps) {
                    INFO(r.name << " R=" << R << " n=" << n << " k=" << k);
                    CHECK(r.alpha <= 1e-9);
                    CHECK(std::abs(r.lhs) <= 1e-8);
                    CHECK(std::abs(r.rhs) <= 1e-12);
                    CHECK((r.status == CheckStatus::vacuous || r.status == CheckStatus::pass));
                    CHECK(r.status != CheckStatus::fail);
                }
            }
        }
    }
}

TEST_CASE("sharpened Polya-Szego on the ellipse family") {
    // closed-form deficit at S_1 = 2: lhs = (c pi/2 - pi c^2) / c^3
    const double a = 1.2;
    const double c = ellipse_c(a);
    const ConvexTestFunction u = quadratic_with_unit_source(ellipse(a), 1, 2.0);
    CHECK(u.coefficient() == doctest::Approx(c).epsilon(1e-14));
    const DeficitReport r = polya_szego_report(u, 1);
    CHECK(r.status == CheckStatus::pass);
    // deficit cpi/2 - pi c^2 normalized by ||u||^{k+1} = c^2
    CHECK(r.lhs == doctest::Approx((c * pi / 2.0 - pi * c * c) / (c * c)).epsilon(1e-6));
    double H = 0.0, Hs = 0.0;
    for (const auto& [key, val] : r.constants) {
        if (key == "H_k(u)") H = val;
        if (key == "H_k(u*)") Hs = val;
    }
    CHECK(H - Hs == doctest::Approx(c * pi / 2.0 - pi * c * c).epsilon(1e-8));
    CHECK(r.rhs < 1e-3 * r.lhs);  // orders of magnitude smaller
    CHECK(r.margin > 0.0);

    // sweep: margin positive and increasing with eccentricity
    double prev_lhs = 0.0, prev_alpha = 0.0;
    for (double aa : {1.05, 1.2, 1.35, 1.5}) {
        const DeficitReport rr = polya_szego_report(quadratic_with_unit_source(ellipse(aa), 1, 2.0), 1);
        CHECK(rr.margin > 0.0);
        CHECK(rr.lhs > prev_lhs);
        CHECK(rr.alpha > prev_alpha);
        prev_lhs = rr.lhs;
        prev_alpha = rr.alpha;
    }

    // 3D quadratic families, both orders
    const ConvexBody E3 = ConvexBody::ellipsoid(Vec::xyz(0, 0, 0), {1.25, 1.0, 0.8});
    for (int k = 1; k <= 2; ++k) {
        const DeficitReport r3 = polya_szego_report(quadratic_with_unit_source(E3, k, 2.0), k);
        CHECK(r3.status == CheckStatus::pass);
        CHECK(r3.margin > 0.0);
    }

    CHECK_THROWS_AS(
        polya_szego_report(ConvexTestFunction::cone_over_body(ellipse(1.2), -1.0, Vec::xy(0, 0)), 1),
        std::invalid_argument);
}

TEST_CASE("sup-norm gap report on the ellipse family") {
    const double a = 1.2;
    const double c = ellipse_c(a);
    const ConvexBody E = ellipse(a);
    const SourceField f = SourceField::constant(E, 2.0);
    const DeficitReport r = talenti_gap_report(E, f, 1);
    CHECK(r.status == CheckStatus::pass);
    // || u*_0 - u0 ||_inf = 1/2 - c and ||u||_inf = c
    double sup = 0.0, rhs_stated = 0.0, rhs_reassembled = 0.0;
    for (const auto& [key, val] : r.constants) {
        if (key == "sup|u*-u0|") sup = val;
        if (key == "rhs_stated") rhs_stated = val;
        if (key == "rhs_reassembled") rhs_reassembled = val;
    }
    CHECK(sup == doctest::Approx(0.5 - c).epsilon(1e-8));
    CHECK(r.lhs == doctest::Approx((0.5 - c) / c).epsilon(1e-8));
    CHECK(r.lhs == doctest::Approx(0.06723).epsilon(1e-3));
    CHECK(r.lhs - rhs_stated > 0.0);
    CHECK(r.lhs - rhs_reassembled > 0.0);

    // deficit grows with eccentricity
    double prev = 0.0;
    for (double aa : {1.05, 1.2, 1.35, 1.5}) {
        const DeficitReport rr = talenti_gap_report(ellipse(aa), SourceField::constant(ellipse(aa), 2.0), 1);
        CHECK(rr.lhs > prev);
        CHECK(rr.margin > 0.0);
        prev = rr.lhs;
    }

    // 3D, k = 2: jump source handled through the breakpoint; ordering holds
    const ConvexBody E3 = ConvexBody::ellipsoid(Vec::xyz(0, 0, 0), {1.3, 1.0, 1.0 / 1.3});
    const DeficitReport r32 = talenti_gap_report(E3, SourceField::constant(E3, 2.0), 2);
    CHECK(r32.status == CheckStatus::pass);
    CHECK(r32.margin > 0.0);

    CHECK_THROWS_AS(talenti_gap_report(ConvexBody::polygon({Vec::xy(0, 0), Vec::xy(1, 0), Vec::xy(0, 1)}), f, 1),
                    std::invalid_argument);
}

TEST_CASE("ball with a non-symmetrized source") {
    const ConvexBody disk = ConvexBody::ball(Vec::xy(0, 0), 1.0);
    // decreasing source: already symmetrized, everything saturates
    const SourceField fdec = SourceField::radial(disk, [](double r) { return 2.0 - r; });
    const DeficitReport rd = talenti_gap_report(disk, fdec, 1);
    CHECK(rd.status == CheckStatus::vacuous);

    // increasing source: strict pointwise inequality in the interior
    const SourceField finc = SourceField::radial(disk, [](double r) { return std::max(r, 1e-9); });
    const DeficitReport ri = talenti_gap_report(disk, finc, 1);
    CHECK(ri.status == CheckStatus::pass);
    CHECK(ri.lhs > 1e-3);
    const DeficitReport rp = pointwise_tso_check(disk, finc, 1);
    CHECK(rp.status == CheckStatus::pass);

    // u(0) = -1/9 for Delta u = r; u0(0) = -(8/3 - 2 ln 2)/6 for the rearranged source
    const DeficitReport rh = hk_comparison_report(disk, finc, 1);
    CHECK(rh.status == CheckStatus::pass);
}

TEST_CASE("energy comparison report on the ellipse family") {
    const double a = 1.2;
    const double c = ellipse_c(a);
    const ConvexBody E = ellipse(a);
    const SourceField f = SourceField::constant(E, 2.0);
    const DeficitReport r = hk_comparison_report(E, f, 1);
    CHECK(r.status == CheckStatus::pass);
    double H_u = 0.0, H_u0 = 0.0, l1 = 0.0;
    for (const auto& [key, val] : r.constants) {
        if (key == "H_k(u)") H_u = val;
        if (key == "H_k(u0)") H_u0 = val;
        if (key == "f_l1") l1 = val;
    }
    CHECK(H_u == doctest::Approx(c * pi / 2.0).epsilon(1e-8));
    CHECK(H_u0 == doctest::Approx(pi / 4.0).epsilon(1e-8));
    CHECK(H_u0 - H_u == doctest::Approx(0.04950).epsilon(1e-3));
    CHECK(l1 == doctest::Approx(2.0 * pi).epsilon(1e-12));
    // cross-report consistency: lhs is exactly the gap over ||u||_inf ||f||_1
    CHECK(r.lhs == doctest::Approx((H_u0 - H_u) / (c * l1)).epsilon(1e-13));

    double prev_gap = 0.0;
    for (double aa : {1.05, 1.2, 1.35, 1.5}) {
        const DeficitReport rr = hk_comparison_report(ellipse(aa), SourceField::constant(ellipse(aa), 2.0), 1);
        CHECK(rr.margin > 0.0);
        double hu = 0.0, hu0 = 0.0;
        for (const auto& [key, val] : rr.constants) {
            if (key == "H_k(u)") hu = val;
            if (key == "H_k(u0)") hu0 = val;
        }
        CHECK(hu0 - hu > prev_gap);
        prev_gap = hu0 - hu;
    }
}

TEST_CASE("pointwise comparison on the ellipse") {
    const double a = 1.2;
    const double c = ellipse_c(a);
    const ConvexBody E = ellipse(a);
    const DeficitReport r = pointwise_tso_check(E, SourceField::constant(E, 2.0), 1);
    CHECK(r.status == CheckStatus::pass);
    CHECK(r.lhs <= 1e-8);
    // spot values: u0(0) = -1/2 <= u*_0(0) = -c <= 0
    CHECK(-0.5 <= -c);
    CHECK(c > 0.0);
}

TEST_CASE("quantitative Faber-Krahn") {
    const ConvexBody disk = ConvexBody::ball(Vec::xy(0, 0), 1.0);
    const DeficitReport rb = faber_krahn_report(disk, 1);
    CHECK(rb.status == CheckStatus::vacuous);
    CHECK(rb.lhs == 0.0);

    const DeficitReport re = faber_krahn_report(ellipse(1.2), 1);
    CHECK(re.status == CheckStatus::pass);
    CHECK(re.lhs > 0.0);
    CHECK(re.margin > 0.0);

    // square [-1,1]^2: sigma = pi^2/2, ball of equal area has j01^2 pi / 4
    const ConvexBody sq = ConvexBody::polygon({Vec::xy(-1, -1), Vec::xy(1, -1), Vec::xy(1, 1), Vec::xy(-1, 1)});
    const DeficitReport rs = faber_krahn_report(sq, 1);
    CHECK(rs.status == CheckStatus::pass);
    double s_fd = 0.0, s_ball = 0.0;
    for (const auto& [key, val] : rs.constants) {
        if (key == "sigma_fd(Omega)") s_fd = val;
        if (key == "sigma(Omega*)") s_ball = val;
    }
    CHECK(s_fd == doctest::Approx(pi * pi / 2.0).epsilon(2e-3));
    CHECK(s_ball == doctest::Approx(5.783185962946785 * pi / 4.0).epsilon(1e-6));
    CHECK(rs.lhs > 0.3);

    // k = 2 on a 3D body: bound-only mode with a variational upper bound
    const ConvexBody E3 = ConvexBody::ellipsoid(Vec::xyz(0, 0, 0), {1.3, 1.0, 1.0 / 1.3});
    const DeficitReport r32 = faber_krahn_report(E3, 2);
    CHECK(r32.status == CheckStatus::bound_only);
    bool has_upper = false;
    for (const auto& [key, val] : r32.constants)
        if (key == "sigma_upper_bound") {
            has_upper = true;
            CHECK(val > 0.0);
        }
    CHECK(has_upper);
}

TEST_CASE("quantitative Saint-Venant") {
    const DeficitReport rb = saint_venant_report(ConvexBody::ball(Vec::xy(0, 0), 1.0), 1);
    CHECK(rb.status == CheckStatus::vacuous);
    CHECK(rb.lhs == 0.0);

    const double a = 1.2;
    const double c = ellipse_c(a);
    const DeficitReport re = saint_venant_report(ellipse(a), 1);
    CHECK(re.status == CheckStatus::pass);
    double T = 0.0, Tstar = 0.0;
    for (const auto& [key, val] : re.constants) {
        if (key == "T(Omega)") T = val;
        if (key == "T(Omega*)") Tstar = val;
    }
    CHECK(T == doctest::Approx(c * pi / 4.0).epsilon(1e-8));
    CHECK(Tstar == doctest::Approx(pi / 8.0).epsilon(1e-8));
    CHECK(re.lhs == doctest::Approx(4.0 / (c * pi) - 8.0 / pi).epsilon(1e-8));
    CHECK(re.lhs == doctest::Approx(0.17117).epsilon(1e-3));
    CHECK(re.margin > 0.0);

    double prev_lhs = 0.0, prev_rhs = 0.0;
    for (double aa : {1.05, 1.2, 1.35, 1.5}) {
        const DeficitReport rr = saint_venant_report(ellipse(aa), 1);
        CHECK(rr.margin > 0.0);
        CHECK(rr.lhs > prev_lhs);
        CHECK(rr.rhs > prev_rhs);
        prev_lhs = rr.lhs;
        prev_rhs = rr.rhs;
    }

    // 3D at both orders
    const ConvexBody E3 = ConvexBody::ellipsoid(Vec::xyz(0, 0, 0), {1.3, 1.0, 1.0 / 1.3});
    for (int k = 1; k <= 2; ++k) {
        const DeficitReport r3 = saint_venant_report(E3, k);
        CHECK(r3.status == CheckStatus::pass);
        CHECK(r3.margin > 0.0);
    }

    CHECK_THROWS_AS(saint_venant_report(ConvexBody::polygon({Vec::xy(0, 0), Vec::xy(1, 0), Vec::xy(0, 1)}), 1),
                    std::invalid_argument);
}

TEST_CASE("report json serialization") {
    const ConvexBody E = ellipse(1.2);
    const DeficitReport r = saint_venant_report(E, 1);
    const std::string js = report_json(r, "ellipses-0001");
    CHECK(js.find("\"name\":\"saint_venant\"") != std::string::npos);
    CHECK(js.find("\"body_id\":\"ellipses-0001\"") != std::string::npos);
    CHECK(js.find("\"status\":\"pass\"") != std::string::npos);
    CHECK(js.find("\"alpha\":") != std::string::npos);
    CHECK(js.find("\"constants\":{") != std::string::npos);
    CHECK(js.find(":nan") == std::string::npos);
    CHECK(js.find(":inf") == std::string::npos);
}
