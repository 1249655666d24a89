#include "hsymm/quermass.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hsymm/rng.hpp"

namespace hsymm {

namespace {

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

double polygon_area(const std::vector<Vec>& v) {
    double a2 = 0.0;
    const size_t m = v.size();
    for (size_t i = 0; i < m; ++i) a2 += cross2(v[i], v[(i + 1) % m]);
    return 0.5 * a2;
}

double polygon_perimeter(const std::vector<Vec>& v) {
    double p = 0.0;
    const size_t m = v.size();
    if (m < 2) return 0.0;
    for (size_t i = 0; i < m; ++i) p += (v[(i + 1) % m] - v[i]).norm();
    return p;
}

// Principal curvature radii at outward normal u: eigen-data of the ambient
// Hessian of the 1-homogeneous support function restricted to the tangent
// plane. For the ellipsoid h(x) = sqrt(x^T M x) with M = diag(a_i^2).
void ellipsoid_radii_3d(const std::vector<double>& a, const Vec& u, double& trace, double& det) {
    const double m0 = a[0] * a[0], m1 = a[1] * a[1], m2 = a[2] * a[2];
    const Vec mu = Vec::xyz(m0 * u.x(), m1 * u.y(), m2 * u.z());
    const double h = std::sqrt(u.dot(mu));
    // tangent frame
    Vec e1 = std::abs(u.z()) < 0.9 ? cross(u, Vec::xyz(0, 0, 1)).normalized()
                                   : cross(u, Vec::xyz(1, 0, 0)).normalized();
    Vec e2 = cross(u, e1);
    auto hess = [&](const Vec& p, const Vec& q) {
        const double pmq = m0 * p.x() * q.x() + m1 * p.y() * q.y() + m2 * p.z() * q.z();
        const double pmu = p.dot(mu), qmu = q.dot(mu);
        return pmq / h - pmu * qmu / (h * h * h);
    };
    const double A = hess(e1, e1), B = hess(e1, e2), C = hess(e2, e2);
    trace = A + C;
    det = A * C - B * B;
}

QuermassVector ellipsoid_quermass(const EllipsoidData& e, int n) {
    QuermassVector q;
    q.n = n;
    q.w.assign(static_cast<size_t>(n) + 1, 0.0);
    const double omega_n = unit_ball_volume(n);
    double prod = 1.0;
    for (double ai : e.a) prod *= ai;
    q.w[0] = omega_n * prod;
    q.w[static_cast<size_t>(n)] = omega_n;
    if (n == 2) {
        // perimeter by quadrature of |boundary speed|
        const int m = 4096;
        double per = 0.0;
        for (int i = 0; i < m; ++i) {
            const double t = 2.0 * std::numbers::pi * i / m;
            const double dx = -e.a[0] * std::sin(t), dy = e.a[1] * std::cos(t);
            per += std::sqrt(dx * dx + dy * dy);
        }
        per *= 2.0 * std::numbers::pi / m;
        q.w[1] = 0.5 * per;
    } else {
        const SphereGrid& g = SphereGrid::standard(3);
        double surf = 0.0, hint = 0.0;
        for (size_t i = 0; i < g.size(); ++i) {
            double tr = 0.0, det = 0.0;
            ellipsoid_radii_3d(e.a, g.dirs[i], tr, det);
            surf += g.weights[i] * det;
            double s = 0.0;
            for (int d = 0; d < 3; ++d) s += e.a[static_cast<size_t>(d)] * e.a[static_cast<size_t>(d)] * g.dirs[i][d] * g.dirs[i][d];
            hint += g.weights[i] * std::sqrt(s);
        }
        q.w[1] = surf / 3.0;
        q.w[2] = hint / 3.0;  // W_{n-1} = (1/n) * integral of h over the sphere
    }
    return q;
}

}  // namespace

QuermassVector quermassintegrals(const ConvexBody& body) {
    const int n = body.dim();
    const double omega_n = unit_ball_volume(n);
    QuermassVector q;
    q.n = n;
    q.w.assign(static_cast<size_t>(n) + 1, 0.0);
    q.w[static_cast<size_t>(n)] = omega_n;

    if (const auto* poly = body.as_polygon()) {
        q.w[0] = std::max(0.0, polygon_area(poly->v));
        q.w[1] = 0.5 * polygon_perimeter(poly->v);
        return q;
    }
    if (const auto* p3 = body.as_polytope3()) {
        q.w[0] = p3->volume;
        q.w[1] = p3->surface_area / 3.0;
        double m = 0.0;
        for (const auto& e : p3->edges) m += e.length * e.exterior_angle;
        q.w[2] = m / 6.0;  // (1/n) * (1/2) * sum length x exterior dihedral
        return q;
    }
    if (const auto* f = body.as_fourier()) {
        // area = (1/2) integral (h^2 - h'^2), perimeter = integral h; both
        // evaluate exactly in the coefficients
        double area = std::numbers::pi * f->a0 * f->a0;
        for (size_t j = 0; j < f->ab.size(); ++j) {
            const double jj = static_cast<double>(j + 1);
            area += 0.5 * std::numbers::pi * (1.0 - jj * jj) * (f->ab[j][0] * f->ab[j][0] + f->ab[j][1] * f->ab[j][1]);
        }
        q.w[0] = area;
        q.w[1] = std::numbers::pi * f->a0;
        return q;
    }
    if (const auto* b = body.as_ball()) {
        for (int i = 0; i <= n; ++i) q.w[static_cast<size_t>(i)] = omega_n * std::pow(b->radius, n - i);
        return q;
    }
    if (const auto* e = body.as_ellipsoid()) return ellipsoid_quermass(*e, n);
    if (const auto* inf = body.as_inflated()) {
        // W_j(Omega + rho B) = sum_i C(n-j, i) W_{j+i}(Omega) rho^i
        const QuermassVector inner = quermassintegrals(rep_body(inf->inner));
        for (int j = 0; j <= n; ++j) {
            double s = 0.0;
            for (int i = 0; i + j <= n; ++i)
                s += binomial(n - j, i) * inner.w[static_cast<size_t>(j + i)] * std::pow(inf->rho, i);
            q.w[static_cast<size_t>(j)] = s;
        }
        return q;
    }
    throw std::invalid_argument("quermassintegrals: unsupported body variant");
}

double mean_radius(const QuermassVector& q, int k) {
    if (k < 0 || k >= q.n) throw std::invalid_argument("mean_radius: need 0 <= k <= n-1");
    const double wk = q.w[static_cast<size_t>(k)];
    if (wk <= 0.0) return 0.0;
    return std::pow(wk / unit_ball_volume(q.n), 1.0 / static_cast<double>(q.n - k));
}

double mean_radius(const ConvexBody& body, int k) { return mean_radius(quermassintegrals(body), k); }

double mc_volume(const ConvexBody& body, double rho, long samples, uint64_t seed, double* stderr_out) {
    const int n = body.dim();
    double lo[3], hi[3], vol_box = 1.0;
    for (int i = 0; i < n; ++i) {
        Vec e = Vec::zero(n);
        e[i] = 1.0;
        hi[i] = body.support_hom(e) + rho;
        e[i] = -1.0;
        lo[i] = -body.support_hom(e) - rho;
        vol_box *= hi[i] - lo[i];
    }
    Rng rng(seed);
    long hits = 0;
    for (long s = 0; s < samples; ++s) {
        Vec x = Vec::zero(n);
        for (int i = 0; i < n; ++i) x[i] = rng.uniform(lo[i], hi[i]);
        if (body.distance(x) <= rho) ++hits;
    }
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    if (stderr_out) *stderr_out = vol_box * std::sqrt(std::max(p * (1.0 - p), 1e-300) / static_cast<double>(samples));
    return vol_box * p;
}

SteinerCheck steiner_volume_check(const ConvexBody& body, double rho, long samples, uint64_t seed) {
    if (!(rho > 0.0)) throw std::invalid_argument("steiner_volume_check: rho must be positive");
    if (samples < 100000) throw std::invalid_argument("steiner_volume_check: need at least 1e5 samples");
    const QuermassVector q = quermassintegrals(body);
    const int n = q.n;
    SteinerCheck out;
    for (int i = 0; i <= n; ++i) out.predicted += binomial(n, i) * q.w[static_cast<size_t>(i)] * std::pow(rho, i);
    out.estimated = mc_volume(body, rho, samples, seed, &out.stderr_);
    return out;
}

QuermassVector steiner_fit_quermass(const ConvexBody& body, long samples, uint64_t seed) {
    const int n = body.dim();
    const double rhos[6] = {0.0, 0.25, 0.5, 1.0, 1.5, 2.0};
    const int m = 6, cols = n + 1;
    // normal equations for V(rho) ~ sum C(n,i) W_i rho^i
    std::vector<std::vector<double>> ata(static_cast<size_t>(cols), std::vector<double>(static_cast<size_t>(cols), 0.0));
    std::vector<double> atb(static_cast<size_t>(cols), 0.0);
    for (int r = 0; r < m; ++r) {
        const double v = mc_volume(body, rhos[r], samples, Rng::mix(seed, static_cast<uint64_t>(r)));
        std::vector<double> row(static_cast<size_t>(cols));
        for (int i = 0; i <= n; ++i) row[static_cast<size_t>(i)] = binomial(n, i) * std::pow(rhos[r], i);
        for (int i = 0; i <= n; ++i) {
            for (int j = 0; j <= n; ++j) ata[static_cast<size_t>(i)][static_cast<size_t>(j)] += row[static_cast<size_t>(i)] * row[static_cast<size_t>(j)];
            atb[static_cast<size_t>(i)] += row[static_cast<size_t>(i)] * v;
        }
    }
    // Gaussian elimination with partial pivoting
    for (int c = 0; c < cols; ++c) {
        int piv = c;
        for (int r = c + 1; r < cols; ++r)
            if (std::abs(ata[static_cast<size_t>(r)][static_cast<size_t>(c)]) > std::abs(ata[static_cast<size_t>(piv)][static_cast<size_t>(c)])) piv = r;
        std::swap(ata[static_cast<size_t>(c)], ata[static_cast<size_t>(piv)]);
        std::swap(atb[static_cast<size_t>(c)], atb[static_cast<size_t>(piv)]);
        for (int r = c + 1; r < cols; ++r) {
            const double f = ata[static_cast<size_t>(r)][static_cast<size_t>(c)] / ata[static_cast<size_t>(c)][static_cast<size_t>(c)];
            for (int cc = c; cc < cols; ++cc) ata[static_cast<size_t>(r)][static_cast<size_t>(cc)] -= f * ata[static_cast<size_t>(c)][static_cast<size_t>(cc)];
            atb[static_cast<size_t>(r)] -= f * atb[static_cast<size_t>(c)];
        }
    }
    QuermassVector q;
    q.n = n;
    q.w.assign(static_cast<size_t>(cols), 0.0);
    for (int r = cols - 1; r >= 0; --r) {
        double s = atb[static_cast<size_t>(r)];
        for (int c = r + 1; c < cols; ++c) s -= ata[static_cast<size_t>(r)][static_cast<size_t>(c)] * q.w[static_cast<size_t>(c)];
        q.w[static_cast<size_t>(r)] = s / ata[static_cast<size_t>(r)][static_cast<size_t>(r)];
    }
    return q;
}

AsymmetryRecord hausdorff_asymmetry(const ConvexBody& body) {
    const QuermassVector q = quermassintegrals(body);
    AsymmetryRecord rec;
    rec.zeta_nm1 = mean_radius(q, q.n - 1);
    if (rec.zeta_nm1 <= 0.0)
        throw std::domain_error("hausdorff_asymmetry: degenerate body (zeta_{n-1} = 0)");
    const ShapeSummary s = shape_summary(body);
    const ConvexBody steiner_ball = ConvexBody::ball(s.steiner_point, rec.zeta_nm1);
    rec.d_h_to_steiner_ball = hausdorff_distance(body, steiner_ball);
    rec.alpha = rec.d_h_to_steiner_ball / rec.zeta_nm1;
    return rec;
}

}  // namespace hsymm
