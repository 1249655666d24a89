#include "hsymm/khessian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include "hsymm/quermass.hpp"

namespace hsymm {

namespace {

double binom(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::vector<double> ellipsoid_axes(const ConvexBody& body) {
    if (const auto* b = body.as_ball()) return std::vector<double>(static_cast<size_t>(body.dim()), b->radius);
    if (const auto* e = body.as_ellipsoid()) return e->a;
    throw std::invalid_argument("no explicit solution for this body variant");
}

// S_k of a radial function: eigenvalues are p'' (once) and p'/r (n-1 times).
double radial_sk(double dpr_over_r, double d2p, int n, int k) {
    return binom(n - 1, k) * std::pow(dpr_over_r, k) + binom(n - 1, k - 1) * std::pow(dpr_over_r, k - 1) * d2p;
}

const GaussRule& cached_gauss(int m) {
    static const GaussRule g4 = gauss_legendre(4);
    static const GaussRule g64 = gauss_legendre(64);
    static const GaussRule g256 = gauss_legendre(256);
    if (m <= 4) return g4;
    if (m <= 64) return g64;
    return g256;
}

}  // namespace

double s_k_eval(std::span<const double> eigenvalues, int k) {
    const int n = static_cast<int>(eigenvalues.size());
    if (k < 1 || k > n) throw std::invalid_argument("s_k_eval: need 1 <= k <= n");
    std::vector<double> e(static_cast<size_t>(k) + 1, 0.0);
    e[0] = 1.0;
    for (int i = 0; i < n; ++i) {
        const double lam = eigenvalues[static_cast<size_t>(i)];
        for (int j = std::min(k, i + 1); j >= 1; --j) e[static_cast<size_t>(j)] += lam * e[static_cast<size_t>(j - 1)];
    }
    return e[static_cast<size_t>(k)];
}

// ---------------------------------------------------------------------------
// H_k energy
// ---------------------------------------------------------------------------

double hk_energy(const ConvexTestFunction& u, int k, int quad_res) {
    const int n = u.domain().dim();
    if (k < 1 || k > n - 1) throw std::invalid_argument("hk_energy: need 1 <= k <= n-1");
    switch (u.family()) {
        case ConvexTestFunction::Family::ConeOverBody:
            throw std::invalid_argument("hk_energy: cone family has a distributional Hessian");
        case ConvexTestFunction::Family::QuadraticOnEllipsoid: {
            const std::vector<double> a = ellipsoid_axes(u.domain());
            const double kap = u.coefficient();
            std::vector<double> lam(a.size());
            for (size_t i = 0; i < a.size(); ++i) lam[i] = 2.0 * kap / (a[i] * a[i]);
            const double sk = s_k_eval(lam, k);
            double prod = 1.0;
            for (double ai : a) prod *= ai;
            const double int_one_minus_q = prod * 2.0 * unit_ball_volume(n) / (n + 2.0);
            return sk * kap * int_one_minus_q / (k + 1.0);
        }
        case ConvexTestFunction::Family::RadialOnBall: {
            const auto* b = u.domain().as_ball();
            const double R = b->radius;
            const GaussRule g = gauss_on(0.0, R, std::max(quad_res, 64));
            double acc = 0.0;
            for (size_t i = 0; i < g.x.size(); ++i) {
                const double r = g.x[i];
                const double sk = radial_sk(u.radial_d1(r) / r, u.radial_d2(r), n, k);
                acc += g.w[i] * (-u.radial_eval(r)) * sk * std::pow(r, n - 1);
            }
            return n * unit_ball_volume(n) * acc / (k + 1.0);
        }
    }
    throw std::logic_error("unreachable");
}

double hk_energy_quadrature(const ConvexTestFunction& u, int k, int quad_res) {
    const int n = u.domain().dim();
    if (k < 1 || k > n - 1) throw std::invalid_argument("hk_energy_quadrature: need 1 <= k <= n-1");
    if (u.family() == ConvexTestFunction::Family::ConeOverBody)
        throw std::invalid_argument("hk_energy_quadrature: cone family has a distributional Hessian");
    if (u.family() == ConvexTestFunction::Family::RadialOnBall) return hk_energy(u, k, quad_res);

    // quadratic on an ellipsoid: polar quadrature pulled back to the unit ball
    const std::vector<double> a = ellipsoid_axes(u.domain());
    const double kap = u.coefficient();
    std::vector<double> lam(a.size());
    for (size_t i = 0; i < a.size(); ++i) lam[i] = 2.0 * kap / (a[i] * a[i]);
    const double sk = s_k_eval(lam, k);
    double prod = 1.0;
    for (double ai : a) prod *= ai;
    const GaussRule g = gauss_on(0.0, 1.0, std::max(quad_res, 64));
    double acc = 0.0;
    for (size_t i = 0; i < g.x.size(); ++i) {
        const double r = g.x[i];
        acc += g.w[i] * kap * (1.0 - r * r) * std::pow(r, n - 1);
    }
    return sk * prod * n * unit_ball_volume(n) * acc / (k + 1.0);
}

// ---------------------------------------------------------------------------
// sources and rearrangement
// ---------------------------------------------------------------------------

SourceField SourceField::constant(const ConvexBody& domain, double c) {
    if (!(c > 0.0)) throw std::invalid_argument("SourceField: constant must be positive");
    SourceField s;
    s.family_ = Family::Constant;
    s.domain_ = domain;
    s.c_ = c;
    return s;
}

SourceField SourceField::radial(const ConvexBody& ball_domain, std::function<double(double)> f) {
    const auto* b = ball_domain.as_ball();
    if (!b) throw std::invalid_argument("SourceField::radial: domain must be a ball");
    for (int i = 0; i <= 64; ++i)
        if (!(f(b->radius * i / 64.0) > 0.0))
            throw std::invalid_argument("SourceField: source must be positive");
    SourceField s;
    s.family_ = Family::RadialMonotone;
    s.domain_ = ball_domain;
    s.fr_ = std::move(f);
    return s;
}

SourceField SourceField::general(const ConvexBody& domain, std::function<double(const Vec&)> f) {
    if (domain.dim() != 2) throw std::invalid_argument("SourceField::general: 2D domains only");
    SourceField s;
    s.family_ = Family::General;
    s.domain_ = domain;
    s.fg_ = std::move(f);
    return s;
}

double SourceField::eval(const Vec& x) const {
    switch (family_) {
        case Family::Constant: return c_;
        case Family::RadialMonotone: return fr_((x - domain_.as_ball()->center).norm());
        case Family::General: return fg_(x);
    }
    throw std::logic_error("unreachable");
}

double SourceField::l1_norm() const {
    const int n = domain_.dim();
    switch (family_) {
        case Family::Constant:
            return c_ * quermassintegrals(domain_).w[0];
        case Family::RadialMonotone: {
            const double R = domain_.as_ball()->radius;
            const GaussRule g = gauss_on(0.0, R, 256);
            double acc = 0.0;
            for (size_t i = 0; i < g.x.size(); ++i) acc += g.w[i] * fr_(g.x[i]) * std::pow(g.x[i], n - 1);
            return n * unit_ball_volume(n) * acc;
        }
        case Family::General: {
            // midpoint grid over the bounding box
            const int m = 2048;
            double lo[2], hi[2];
            for (int d = 0; d < 2; ++d) {
                Vec e = Vec::zero(2);
                e[d] = 1.0;
                hi[d] = domain_.support_hom(e);
                e[d] = -1.0;
                lo[d] = -domain_.support_hom(e);
            }
            const double hx = (hi[0] - lo[0]) / m, hy = (hi[1] - lo[1]) / m;
            double acc = 0.0;
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    const Vec x = Vec::xy(lo[0] + (i + 0.5) * hx, lo[1] + (j + 0.5) * hy);
                    if (domain_.contains(x, 0.0)) acc += fg_(x);
                }
            return acc * hx * hy;
        }
    }
    throw std::logic_error("unreachable");
}

RadialProfile schwarz_rearrange(const SourceField& f, int r_grid) {
    if (r_grid < 16) throw std::invalid_argument("schwarz_rearrange: grid too coarse");
    const int n = f.domain().dim();
    const double omega_n = unit_ball_volume(n);
    const double vol = quermassintegrals(f.domain()).w[0];
    const double r_max = std::pow(vol / omega_n, 1.0 / n);  // = zeta_0

    std::vector<double> r(static_cast<size_t>(r_grid) + 1), v(static_cast<size_t>(r_grid) + 1);
    for (int i = 0; i <= r_grid; ++i) r[static_cast<size_t>(i)] = r_max * i / r_grid;

    switch (f.family()) {
        case SourceField::Family::Constant: {
            std::fill(v.begin(), v.end(), f.constant_value());
            return RadialProfile(std::move(r), std::move(v));
        }
        case SourceField::Family::RadialMonotone: {
            const double R = f.domain().as_ball()->radius;
            // monotonicity on a probe grid
            bool incr = true, decr = true;
            double prev = f.radial_value(0.0);
            for (int i = 1; i <= 256; ++i) {
                const double cur = f.radial_value(R * i / 256.0);
                if (cur > prev + 1e-14) decr = false;
                if (cur < prev - 1e-14) incr = false;
                prev = cur;
            }
            if (decr) {
                for (int i = 0; i <= r_grid; ++i) v[static_cast<size_t>(i)] = f.radial_value(r[static_cast<size_t>(i)]);
                return RadialProfile(std::move(r), std::move(v));
            }
            if (incr) {
                // |{f > t}| = omega_n (R^n - rho(t)^n): f0(s) = f((R^n - s^n)^{1/n})
                for (int i = 0; i <= r_grid; ++i) {
                    const double s = r[static_cast<size_t>(i)];
                    v[static_cast<size_t>(i)] = f.radial_value(std::pow(std::max(0.0, std::pow(R, n) - std::pow(s, n)), 1.0 / n));
                }
                return RadialProfile(std::move(r), std::move(v));
            }
            // general radial function: sort shell samples by value
            const int m = 1 << 16;
            std::vector<std::pair<double, double>> cells(static_cast<size_t>(m));  // (value, measure)
            for (int i = 0; i < m; ++i) {
                const double rr = R * (i + 0.5) / m;
                cells[static_cast<size_t>(i)] = {f.radial_value(rr), n * omega_n * std::pow(rr, n - 1) * (R / m)};
            }
            std::sort(cells.begin(), cells.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
            double acc = 0.0;
            size_t c = 0;
            for (int i = 0; i <= r_grid; ++i) {
                const double target = omega_n * std::pow(r[static_cast<size_t>(i)], n);
                while (c + 1 < cells.size() && acc < target) acc += cells[c++].second;
                v[static_cast<size_t>(i)] = cells[c].first;
            }
            for (int i = 1; i <= r_grid; ++i)
                v[static_cast<size_t>(i)] = std::min(v[static_cast<size_t>(i)], v[static_cast<size_t>(i - 1)]);
            return RadialProfile(std::move(r), std::move(v));
        }
        case SourceField::Family::General: {
            const int m = 2048;
            double lo[2], hi[2];
            for (int d = 0; d < 2; ++d) {
                Vec e = Vec::zero(2);
                e[d] = 1.0;
                hi[d] = f.domain().support_hom(e);
                e[d] = -1.0;
                lo[d] = -f.domain().support_hom(e);
            }
            const double hx = (hi[0] - lo[0]) / m, hy = (hi[1] - lo[1]) / m;
            std::vector<double> vals;
            vals.reserve(static_cast<size_t>(m) * 16);
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < m; ++j) {
                    const Vec x = Vec::xy(lo[0] + (i + 0.5) * hx, lo[1] + (j + 0.5) * hy);
                    if (f.domain().contains(x, 0.0)) vals.push_back(f.eval(x));
                }
            std::sort(vals.begin(), vals.end(), std::greater<double>());
            const double cell = hx * hy;
            for (int i = 0; i <= r_grid; ++i) {
                const double target = omega_n * r[static_cast<size_t>(i)] * r[static_cast<size_t>(i)];
                size_t idx = std::min(vals.size() - 1, static_cast<size_t>(std::max(0.0, target / cell)));
                v[static_cast<size_t>(i)] = vals[idx];
            }
            for (int i = 1; i <= r_grid; ++i)
                v[static_cast<size_t>(i)] = std::min(v[static_cast<size_t>(i)], v[static_cast<size_t>(i - 1)]);
            return RadialProfile(std::move(r), std::move(v));
        }
    }
    throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// radial solver
// ---------------------------------------------------------------------------

RadialSource::RadialSource(const RadialProfile& p)
    : f([p](double r) { return p(std::min(r, p.radius())); }), breakpoints() {}

RadialSolution radial_solution(const RadialSource& f0, double R, int n, int k, int panels) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("radial_solution: need 1 <= k <= n-1");
    if (!(R > 0.0)) throw std::invalid_argument("radial_solution: radius must be positive");
    if (panels < 64) throw std::invalid_argument("radial_solution: too few panels");
    panels += panels % 2;  // Simpson passes over the node grid need an even count

    const double C = binom(n - 1, k - 1);
    const double pref = std::pow(static_cast<double>(k) / C, 1.0 / k);
    const size_t N = static_cast<size_t>(panels);
    const double ht = 0.5 * std::numbers::pi / static_cast<double>(N);

    auto r_of = [&](double t) { return R * std::sin(t); };
    auto integrand_F = [&](double t) {
        const double rr = r_of(t);
        const double fv = f0.f(rr);
        if (fv < -1e-12) throw std::invalid_argument("radial_solution: source must be nonnegative");
        return std::max(0.0, fv) * std::pow(rr, n - 1) * R * std::cos(t);
    };

    // breakpoints in t, for splitting quadrature panels
    std::vector<double> tb;
    for (double rb : f0.breakpoints)
        if (rb > 0.0 && rb < R) tb.push_back(std::asin(rb / R));
    std::sort(tb.begin(), tb.end());

    const GaussRule& g4 = cached_gauss(4);
    auto gauss_seg = [&](auto&& fn, double a, double b) {
        double s = 0.0;
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int q = 0; q < 4; ++q) s += g4.w[static_cast<size_t>(q)] * half * fn(mid + half * g4.x[static_cast<size_t>(q)]);
        return s;
    };
    auto gauss_panel = [&](auto&& fn, double a, double b) {
        // split at interior breakpoints
        double s = 0.0, left = a;
        for (double t : tb) {
            if (t > a + 1e-15 && t < b - 1e-15) {
                s += gauss_seg(fn, left, t);
                left = t;
            }
        }
        return s + gauss_seg(fn, left, b);
    };

    // prefix integral F(t_i) = int_0^{r(t_i)} f0 s^{n-1} ds
    std::vector<double> t(N + 1), F(N + 1, 0.0);
    for (size_t i = 0; i <= N; ++i) t[i] = ht * static_cast<double>(i);
    for (size_t i = 1; i <= N; ++i) F[i] = F[i - 1] + gauss_panel(integrand_F, t[i - 1], t[i]);

    auto F_at = [&](double tt) {
        const size_t i = std::min(N - 1, static_cast<size_t>(tt / ht));
        return F[i] + gauss_panel(integrand_F, t[i], tt);
    };
    auto psi = [&](double tt) {  // pref * (r^{k-n} F(r))^{1/k}, du/dr of the solution
        const double rr = r_of(tt);
        if (rr < 1e-300) return 0.0;
        const double val = std::pow(rr, k - n) * F_at(tt);
        return pref * std::pow(std::max(0.0, val), 1.0 / k);
    };

    RadialSolution sol;
    sol.n = n;
    sol.k = k;
    sol.R = R;
    sol.r.resize(N + 1);
    sol.u.assign(N + 1, 0.0);
    sol.du.resize(N + 1);
    for (size_t i = 0; i <= N; ++i) {
        sol.r[i] = r_of(t[i]);
        sol.du[i] = psi(t[i]);
    }
    auto integrand_u = [&](double tt) { return psi(tt) * R * std::cos(tt); };
    for (size_t i = N; i-- > 0;) sol.u[i] = sol.u[i + 1] - gauss_panel(integrand_u, t[i], t[i + 1]);

    // residual: 6th-order differences in t of u, then of G = r^{n-k}(u')^k,
    // checked against f0 at interior nodes away from breakpoints
    {
        static const double c7[3] = {45.0 / 60.0, -9.0 / 60.0, 1.0 / 60.0};
        auto d_dt = [&](const std::vector<double>& y, size_t i) {
            double s = 0.0;
            for (int j = 1; j <= 3; ++j) s += c7[j - 1] * (y[i + static_cast<size_t>(j)] - y[i - static_cast<size_t>(j)]);
            return s / ht;
        };
        std::vector<double> G(N + 1, 0.0);
        for (size_t i = 3; i + 3 <= N; ++i) {
            const double up = d_dt(sol.u, i) / (R * std::cos(t[i]));
            G[i] = std::pow(sol.r[i], n - k) * std::pow(std::max(0.0, up), k);
        }
        double sup_f = 1e-300;
        for (size_t i = 0; i <= N; ++i) sup_f = std::max(sup_f, f0.f(sol.r[i]));
        double worst = 0.0;
        for (size_t i = 6; i + 6 <= N; ++i) {
            bool near_break = false;
            for (double bb : tb)
                if (std::abs(t[i] - bb) < 8.0 * ht) near_break = true;
            if (near_break) continue;
            const double Gp = d_dt(G, i) / (R * std::cos(t[i]));
            const double lhs = C / k * std::pow(sol.r[i], 1 - n) * Gp;
            worst = std::max(worst, std::abs(lhs - f0.f(sol.r[i])) / std::max(sup_f, std::abs(f0.f(sol.r[i]))));
        }
        sol.max_residual = worst;
    }

    sol.interp_ = MonotoneCubic(sol.r, sol.u);
    return sol;
}

// ---------------------------------------------------------------------------
// radial eigenvalue by shooting
// ---------------------------------------------------------------------------

namespace {

struct ShotResult {
    double terminal = 0.0;  // u(R), or positive surrogate if u crossed early
    std::vector<double> r, u, du;
};

ShotResult shoot(int n, int k, double R, double sigma, int steps, bool record) {
    const double C = binom(n - 1, k - 1);
    const double h = R / steps;
    ShotResult out;
    if (record) {
        out.r.reserve(static_cast<size_t>(steps) + 1);
        out.u.reserve(static_cast<size_t>(steps) + 1);
        out.du.reserve(static_cast<size_t>(steps) + 1);
    }
    // series start at r1 (u' ~ a r with a = (k sigma /(n C))^{1/k})
    const double a = std::pow(k * sigma / (n * C), 1.0 / k);
    double r = h;
    double u = -1.0 + 0.5 * a * h * h;
    double W = (k / C) * sigma * std::pow(h, n) / n;  // W = r^{n-k}(u')^k
    if (record) {
        out.r.push_back(0.0);
        out.u.push_back(-1.0);
        out.du.push_back(0.0);
        out.r.push_back(r);
        out.u.push_back(u);
        out.du.push_back(a * h);
    }
    auto du_of = [&](double rr, double WW) {
        if (WW <= 0.0 || rr <= 0.0) return 0.0;
        return std::pow(WW * std::pow(rr, k - n), 1.0 / k);
    };
    auto dW_of = [&](double rr, double uu) {
        const double mu = std::max(0.0, -uu);
        return (k / C) * sigma * std::pow(mu, k) * std::pow(rr, n - 1);
    };
    for (int i = 1; i < steps; ++i) {
        const double k1u = du_of(r, W), k1w = dW_of(r, u);
        const double k2u = du_of(r + 0.5 * h, W + 0.5 * h * k1w), k2w = dW_of(r + 0.5 * h, u + 0.5 * h * k1u);
        const double k3u = du_of(r + 0.5 * h, W + 0.5 * h * k2w), k3w = dW_of(r + 0.5 * h, u + 0.5 * h * k2u);
        const double k4u = du_of(r + h, W + h * k3w), k4w = dW_of(r + h, u + h * k3u);
        u += h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        W += h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
        r += h;
        if (record) {
            out.r.push_back(r);
            out.u.push_back(u);
            out.du.push_back(du_of(r, W));
        }
        if (u >= 0.0) {
            out.terminal = 1.0 + (R - r) / R;  // crossed before the boundary
            return out;
        }
    }
    out.terminal = u;
    return out;
}

}  // namespace

RadialEigenResult radial_eigen(int n, int k, double R, int steps) {
    if (k < 1 || k > n - 1) throw std::invalid_argument("radial_eigen: need 1 <= k <= n-1");
    if (!(R > 0.0)) throw std::invalid_argument("radial_eigen: radius must be positive");
    if (steps < 64) throw std::invalid_argument("radial_eigen: too few steps");
    steps += steps % 2;

    double lo = 0.5 / std::pow(R, 2 * k);
    while (shoot(n, k, R, lo, steps, false).terminal >= 0.0) lo *= 0.5;
    double hi = 8.0 / std::pow(R, 2 * k);
    int expansions = 0;
    while (shoot(n, k, R, hi, steps, false).terminal < 0.0) {
        hi *= 2.0;
        if (++expansions > 60) throw std::runtime_error("radial_eigen: failed to bracket the eigenvalue");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (shoot(n, k, R, mid, steps, false).terminal < 0.0 ? lo : hi) = mid;
        if (hi - lo <= 1e-13 * hi) break;
    }
    const double sigma = 0.5 * (lo + hi);
    ShotResult s = shoot(n, k, R, sigma, steps, true);

    RadialEigenResult out;
    out.sigma = sigma;
    out.r = std::move(s.r);
    out.u = std::move(s.u);
    out.du = std::move(s.du);
    // normalize the (possibly early-stopped) tail
    while (out.u.size() < static_cast<size_t>(steps) + 1) {
        out.r.push_back(out.r.back() + R / steps);
        out.u.push_back(0.0);
        out.du.push_back(out.du.back());
    }
    out.u.back() = 0.0;

    // Rayleigh quotient of the computed profile: u'' by central differences,
    // S_k from the radial spectrum, composite Simpson in r
    const size_t N = out.u.size() - 1;
    const double h = R / static_cast<double>(N);
    std::vector<double> num(N + 1, 0.0), den(N + 1, 0.0);
    for (size_t i = 0; i <= N; ++i) {
        double d2;
        if (i == 0)
            d2 = 2.0 * (out.u[1] - out.u[0]) / (h * h);
        else if (i == N)
            d2 = (out.du[N] - out.du[N - 1]) / h;
        else
            d2 = (out.u[i + 1] - 2.0 * out.u[i] + out.u[i - 1]) / (h * h);
        const double ratio = (i == 0) ? d2 : out.du[i] / out.r[i];
        const double sk = radial_sk(ratio, d2, n, k);
        const double rn1 = (i == 0) ? 0.0 : std::pow(out.r[i], n - 1);
        num[i] = (-out.u[i]) * sk * rn1;
        den[i] = std::pow(-out.u[i], k + 1) * rn1;
    }
    auto simpson = [&](const std::vector<double>& y) {
        double s = y[0] + y[N];
        for (size_t i = 1; i < N; ++i) s += y[i] * ((i % 2) ? 4.0 : 2.0);
        return s * h / 3.0;
    };
    out.rayleigh = simpson(num) / simpson(den);
    return out;
}

// ---------------------------------------------------------------------------
// torsional rigidity
// ---------------------------------------------------------------------------

double torsional_rigidity(const ConvexBody& body, int k) {
    const int n = body.dim();
    if (k < 1 || k > n - 1) throw std::invalid_argument("torsional_rigidity: need 1 <= k <= n-1");
    const std::vector<double> a = ellipsoid_axes(body);
    std::vector<double> invsq(a.size());
    double prod = 1.0;
    for (size_t i = 0; i < a.size(); ++i) {
        invsq[i] = 1.0 / (a[i] * a[i]);
        prod *= a[i];
    }
    // quadratic solution of S_k(D^2 u) = 1: u = kappa (q - 1)
    const double kap = 0.5 * std::pow(s_k_eval(invsq, k), -1.0 / k);
    const double int_mu = kap * prod * 2.0 * unit_ball_volume(n) / (n + 2.0);  // integral of -u
    // T = (int -u)^{k+1} / ((k+1) H_k(u)); with S_k = 1 this is (int -u)^k
    const ConvexTestFunction u = ConvexTestFunction::quadratic_on_ellipsoid(body, kap);
    const double hk = hk_energy(u, k);
    const double T = std::pow(int_mu, k + 1) / ((k + 1.0) * hk);
    // scale invariance of the quotient (internal consistency)
    const double hk2 = hk_energy(ConvexTestFunction::quadratic_on_ellipsoid(body, 2.0 * kap), k);
    const double T2 = std::pow(2.0 * int_mu, k + 1) / ((k + 1.0) * hk2);
    if (std::abs(T - T2) > 1e-9 * std::abs(T))
        throw std::logic_error("torsional_rigidity: quotient not scale invariant");
    return T;
}

// ---------------------------------------------------------------------------
// finite-difference Dirichlet eigenvalue (5-point, Shortley-Weller)
// ---------------------------------------------------------------------------

namespace {

double fd_eigen_once(const ConvexBody& body, double h) {
    double lo[2], hi[2];
    for (int d = 0; d < 2; ++d) {
        Vec e = Vec::zero(2);
        e[d] = 1.0;
        hi[d] = body.support_hom(e);
        e[d] = -1.0;
        lo[d] = -body.support_hom(e);
    }
    const int nx = static_cast<int>(std::floor((hi[0] - lo[0]) / h)) + 1;
    const int ny = static_cast<int>(std::floor((hi[1] - lo[1]) / h)) + 1;
    std::vector<int> id(static_cast<size_t>(nx) * static_cast<size_t>(ny), -1);
    std::vector<Vec> pts;
    auto at = [&](int i, int j) -> int& { return id[static_cast<size_t>(j) * static_cast<size_t>(nx) + static_cast<size_t>(i)]; };
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const Vec x = Vec::xy(lo[0] + i * h, lo[1] + j * h);
            if (body.contains(x, 0.0)) {
                at(i, j) = static_cast<int>(pts.size());
                pts.push_back(x);
            }
        }
    const int m = static_cast<int>(pts.size());
    if (m < 9) throw std::invalid_argument("fd_laplace_eigen: grid too coarse");

    // boundary crossing fraction along the segment towards an outside neighbor
    auto fraction = [&](const Vec& x, const Vec& dir) {
        double a = 0.0, b = 1.0;
        for (int it = 0; it < 60; ++it) {
            const double mid = 0.5 * (a + b);
            (body.contains(x + dir * (mid * h), 0.0) ? a : b) = mid;
        }
        return std::max(0.5 * (a + b), 1e-6);
    };

    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(static_cast<size_t>(m) * 5);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i) {
            const int row = at(i, j);
            if (row < 0) continue;
            const Vec x = pts[static_cast<size_t>(row)];
            const int nb[4][2] = {{i + 1, j}, {i - 1, j}, {i, j + 1}, {i, j - 1}};
            const Vec dirs[4] = {Vec::xy(1, 0), Vec::xy(-1, 0), Vec::xy(0, 1), Vec::xy(0, -1)};
            double alpha[4];
            int cols[4];
            for (int q = 0; q < 4; ++q) {
                const int ii = nb[q][0], jj = nb[q][1];
                cols[q] = (ii >= 0 && ii < nx && jj >= 0 && jj < ny) ? at(ii, jj) : -1;
                alpha[q] = cols[q] >= 0 ? 1.0 : fraction(x, dirs[q]);
            }
            const double diag = 2.0 / (h * h) * (1.0 / (alpha[0] * alpha[1]) + 1.0 / (alpha[2] * alpha[3]));
            trip.emplace_back(row, row, diag);
            const double pair_x = alpha[0] + alpha[1], pair_y = alpha[2] + alpha[3];
            const double den[4] = {alpha[0] * pair_x, alpha[1] * pair_x, alpha[2] * pair_y, alpha[3] * pair_y};
            for (int q = 0; q < 4; ++q)
                if (cols[q] >= 0) trip.emplace_back(row, cols[q], -2.0 / (h * h) / den[q]);
        }
    Eigen::SparseMatrix<double> A(m, m);
    A.setFromTriplets(trip.begin(), trip.end());
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.compute(A);
    if (lu.info() != Eigen::Success) throw std::runtime_error("fd_laplace_eigen: factorization failed");

    Eigen::VectorXd x = Eigen::VectorXd::Ones(m).normalized();
    double lambda = 0.0;
    for (int it = 0; it < 500; ++it) {
        const Eigen::VectorXd y = lu.solve(x);
        const double lam = x.dot(y) / y.squaredNorm();  // Rayleigh estimate of 1/mu
        x = y.normalized();
        if (it > 4 && std::abs(lam - lambda) < 1e-13 * std::abs(lam)) {
            lambda = lam;
            break;
        }
        lambda = lam;
    }
    return lambda;
}

}  // namespace

double fd_laplace_eigen(const ConvexBody& body, double h) {
    if (body.dim() != 2) throw std::invalid_argument("fd_laplace_eigen: 2D bodies only");
    const double D = shape_summary(body).diameter;
    if (!(h > 0.0) || h * 40.0 > D * (1.0 + 1e-12))
        throw std::invalid_argument("fd_laplace_eigen: need at least 40 interior nodes across the diameter");
    const double l1 = fd_eigen_once(body, h);
    const double l2 = fd_eigen_once(body, 0.5 * h);
    return (4.0 * l2 - l1) / 3.0;  // h^2 leading error
}

}  // namespace hsymm
