#include "hsymm/stability.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hsymm {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::vacuous: return "vacuous";
        case CheckStatus::bound_only: return "bound_only";
    }
    return "?";
}

namespace {

long double binomial_l(int n, int k) {
    if (k < 0 || k > n) return 0.0L;
    long double r = 1.0L;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long double ball_volume_l(int n) {
    const long double pi = std::numbers::pi_v<long double>;
    return std::pow(pi, 0.5L * n) / std::tgamma(0.5L * n + 1.0L);
}

long double alpha_gs(int n, long double c) {
    const long double pi = std::numbers::pi_v<long double>;
    const long double omega_nm1 = ball_volume_l(n - 1);
    const long double branch1 = 3.0L / (pi * pi * n * (n + 2) * std::pow(2.0L, n));
    const long double branch2 = 16.0L * std::pow(c + 2.0L, 0.5L * (n - 3)) / std::pow(c - 1.0L, static_cast<long double>(n - 2));
    return omega_nm1 / ((n + 1.0L) * (n + 3.0L)) * std::min(branch1, branch2);
}

}  // namespace

ConstantsTable constants_table(int n, int k) {
    if (n < 2) throw std::invalid_argument("constants_table: n >= 2 required");
    if (k == n) throw std::invalid_argument("constants_table: k = n excluded");
    if (k < 1 || k > n - 1) throw std::invalid_argument("constants_table: need 1 <= k <= n-1");

    const long double omega_n = ball_volume_l(n);
    const long double omega_nm1 = ball_volume_l(n - 1);
    const long double beta = alpha_gs(n, n * omega_n / omega_nm1);
    const long double ratio = (2.0L * n + 3.0L) / (2.0L * (n + 2.0L));
    const long double two_h = std::pow(2.0L, 0.5L * (n + 3));  // 2^((n+3)/2)

    ConstantsTable t;
    t.n = n;
    t.k = k;
    t.omega_n = static_cast<double>(omega_n);
    t.omega_nm1 = static_cast<double>(omega_nm1);
    t.beta_n = static_cast<double>(beta);

    const long double kappa1 =
        binomial_l(n - 1, k - 1) / two_h * (k + 1.0L) * (n + 1.0L) * beta / ((n - 1.0L) * (n - k + 1.0L));
    const long double kappa2 = kappa1 / (static_cast<long double>(k) * (k + 1.0L)) * std::pow(ratio, n - k);
    const long double kappa3 = (n + 1.0L) * (k + 1.0L) * beta / (2.0L * n * (n - 1.0L) * (n - k + 1.0L) * omega_n);
    const long double kappa4 = kappa3 / (2.0L * k);
    const long double kappa5 = kappa4 / two_h;
    t.kappa1 = static_cast<double>(kappa1);
    t.kappa2 = static_cast<double>(kappa2);
    t.kappa3 = static_cast<double>(kappa3);
    t.kappa4 = static_cast<double>(kappa4);
    t.kappa5 = static_cast<double>(kappa5);

    const long double wr = omega_nm1 / (n * omega_n);
    const long double c1 = binomial_l(n - 1, k - 1) * std::pow(wr, k + 1) * (n + 1.0L) * beta /
                           (two_h * k * (n - 1.0L) * (n - k + 1.0L)) * std::pow(ratio, n - k);
    t.c1 = static_cast<double>(c1);

    const long double C2s = (n + 1.0L) * (k + 1.0L) * beta * omega_nm1 /
                            (std::pow(2.0L, 0.5L * (n + 9)) * n * n * (n + 2.0L) * (n - 1.0L) * (n - k + 1.0L) *
                             omega_n * omega_n);
    t.C2_stated = static_cast<double>(C2s);
    t.C2_reassembled = static_cast<double>(kappa5 / (2.0L * (n + 2.0L)) * wr);

    const long double C3 = std::pow(ratio, n) * omega_nm1 * beta / (static_cast<long double>(n) * n * omega_n * omega_n) *
                           ((n + 1.0L) * (k + 1.0L) / (k * (n - 1.0L) * (n - k + 1.0L))) /
                           std::pow(2.0L, 0.5L * (n + 7));
    t.C3 = static_cast<double>(C3);

    const long double c4 = binomial_l(n - 1, k - 1) * (k + 1.0L) * (n + 1.0L) * beta *
                           std::pow(omega_nm1, k + 1) /
                           (two_h * k * std::pow(static_cast<long double>(n), k + 1) * (n - 1.0L) * (n - k + 1.0L) *
                            std::pow(omega_n, k + 2)) *
                           std::pow(ratio, n - k);
    t.c4 = static_cast<double>(c4);

    const long double c5 = c1 * (k + 1.0L) / std::pow(static_cast<long double>(n), k + 1) *
                           std::pow(omega_nm1, k + 1) / std::pow(omega_n, 2 * (k + 1));
    t.c5 = static_cast<double>(c5);

    t.exp_gs = 0.5 * (n + 3);
    t.exp_sup = 0.5 * (n + 5);
    t.exp_energy = 0.5 * (n + 3) + k + 1;
    return t;
}

std::vector<std::pair<std::string, double>> ConstantsTable::entries() const {
    return {
        {"n", static_cast<double>(n)},
        {"k", static_cast<double>(k)},
        {"omega_n", omega_n},
        {"omega_nm1", omega_nm1},
        {"beta_n", beta_n},
        {"kappa1", kappa1},
        {"kappa2", kappa2},
        {"kappa3", kappa3},
        {"kappa4", kappa4},
        {"kappa5", kappa5},
        {"c1", c1},
        {"c4", c4},
        {"c5", c5},
        {"C2_stated", C2_stated},
        {"C2_reassembled", C2_reassembled},
        {"C3", C3},
        {"exp_gs", exp_gs},
        {"exp_sup", exp_sup},
        {"exp_energy", exp_energy},
    };
}

double s_poly(int m, double x, double y) {
    double s = 0.0;
    for (int nu = 0; nu < m; ++nu) s += std::pow(x, nu) * std::pow(y, m - nu - 1);
    return s;
}

DeficitReport gs_bound_check(const ConvexBody& body, int i, int j, GsForm form) {
    const int n = body.dim();
    if (!(0 <= i && i < j && j <= n - 1)) throw std::invalid_argument("gs_bound_check: need 0 <= i < j <= n-1");
    const QuermassVector q = quermassintegrals(body);
    const double omega_n = q.w[static_cast<size_t>(n)];

    DeficitReport rep;
    rep.name = (form == GsForm::full ? "gs_bound_full" : form == GsForm::simplified ? "gs_bound_simplified" : "gs_bound_mean_radii");
    rep.n = n;
    rep.constants.emplace_back("i", i);
    rep.constants.emplace_back("j", j);

    const double wi = q.w[static_cast<size_t>(i)];
    const double wj = q.w[static_cast<size_t>(j)];
    if (wi <= 0.0) {
        rep.status = CheckStatus::vacuous;
        rep.note = "degenerate: W_i = 0, inequality vacuous";
        return rep;
    }

    const AsymmetryRecord asym = hausdorff_asymmetry(body);
    rep.alpha = asym.alpha;
    const ConstantsTable tab = constants_table(n, 1);
    const double beta_n = tab.beta_n;
    rep.constants.emplace_back("beta_n", beta_n);

    if (form == GsForm::mean_radii) {
        const double zi = mean_radius(q, i), zj = mean_radius(q, j);
        const double e = static_cast<double>((n - j) * (n - i));
        const double zi_p = std::pow(zi, e);
        rep.lhs = (std::pow(zj, e) - zi_p) / zi_p;
    } else {
        const double denom = std::pow(wi, n - j);
        rep.lhs = (std::pow(omega_n, i - j) * std::pow(wj, n - i) - denom) / denom;
    }

    const double dh = asym.d_h_to_steiner_ball;
    const double common = (n + 1.0) * beta_n / (n * (n - 1.0) * omega_n);
    switch (form) {
        case GsForm::full: {
            const double wn1 = q.w[static_cast<size_t>(n - 1)];
            const double wn2 = q.w[static_cast<size_t>(n - 2)];
            rep.rhs = (n + 1.0) / (n * (n - 1.0)) * s_poly(j - i, wn1 * wn1 / omega_n, wn2) * beta_n /
                      std::pow(wn2, j - i) * std::pow(omega_n / wn1, 0.5 * (n - 1)) * std::pow(dh, tab.exp_gs);
            break;
        }
        case GsForm::simplified:
            rep.rhs = common * std::pow(omega_n * dh / q.w[static_cast<size_t>(n - 1)], tab.exp_gs);
            break;
        case GsForm::mean_radii:
            rep.rhs = common * std::pow(dh / asym.zeta_nm1, tab.exp_gs);
            break;
    }
    rep.margin = rep.lhs - rep.rhs;

    const bool ok = rep.margin >= -1e-12 && rep.lhs >= -1e-12;
    if (!ok)
        rep.status = CheckStatus::fail;
    else if (rep.alpha <= 1e-9 && std::abs(rep.lhs) <= 1e-8 && std::abs(rep.rhs) <= 1e-12)
        rep.status = CheckStatus::vacuous;
    else
        rep.status = CheckStatus::pass;
    return rep;
}

DeficitReport propagation_check(const ConvexBody& outer, const ConvexBody& inner) {
    if (outer.dim() != inner.dim()) throw std::invalid_argument("propagation_check: dimension mismatch");
    const int n = outer.dim();
    const SphereGrid& g = SphereGrid::standard(n);
    double scale = 1.0;
    for (const Vec& u : g.dirs) scale = std::max(scale, std::abs(outer.support_hom(u)));
    for (const Vec& u : g.dirs)
        if (inner.support_hom(u) > outer.support_hom(u) + 1e-9 * scale)
            throw std::invalid_argument("propagation_check: inner body is not contained in outer");

    const AsymmetryRecord ao = hausdorff_asymmetry(outer);
    const AsymmetryRecord ai = hausdorff_asymmetry(inner);
    const ShapeSummary so = shape_summary(outer);
    const ShapeSummary si = shape_summary(inner);
    const ConvexBody b_outer = ConvexBody::ball(so.steiner_point, ao.zeta_nm1);
    const ConvexBody b_inner = ConvexBody::ball(si.steiner_point, ai.zeta_nm1);

    const double d_pair = hausdorff_distance(outer, inner);
    const double d_outer = hausdorff_distance(outer, b_outer);
    const double threshold = d_outer / (2.0 * (n + 2.0));

    DeficitReport rep;
    rep.name = "propagation";
    rep.n = n;
    rep.alpha = ao.alpha;
    rep.constants.emplace_back("d_H(Omega,U)", d_pair);
    rep.constants.emplace_back("d_H(Omega,B_R)", d_outer);
    rep.constants.emplace_back("threshold", threshold);

    rep.lhs = hausdorff_distance(inner, b_inner);
    rep.rhs = 0.5 * d_outer;
    rep.margin = rep.lhs - rep.rhs;

    if (d_pair > threshold + 1e-12) {
        rep.status = CheckStatus::vacuous;
        rep.note = "hypothesis not met";
        return rep;
    }
    if (rep.margin >= -1e-12)
        rep.status = (rep.alpha <= 1e-9 && std::abs(rep.lhs) <= 1e-8) ? CheckStatus::vacuous : CheckStatus::pass;
    else
        rep.status = CheckStatus::fail;
    return rep;
}

PowerBound half_power_bound(double alpha, double x) {
    if (!(alpha > 0.0)) throw std::invalid_argument("half_power_bound: alpha must be positive");
    if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("half_power_bound: x must lie in [0, 1]");
    PowerBound b;
    b.lhs = std::pow(1.0 + x, alpha);
    b.rhs = 1.0 + 0.5 * alpha * x;
    b.pass = b.lhs >= b.rhs;
    return b;
}

}  // namespace hsymm
