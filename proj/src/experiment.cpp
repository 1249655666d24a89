#include "hsymm/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "hsymm/khessian.hpp"
#include "hsymm/quermass.hpp"
#include "hsymm/rng.hpp"
#include "hsymm/stability.hpp"
#include "hsymm/symmetrize.hpp"
#include "hsymm/verify.hpp"

namespace hsymm {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
}

namespace {

std::vector<Vec> hull2d(std::vector<Vec> pts) {
    std::sort(pts.begin(), pts.end(), [](const Vec& a, const Vec& b) {
        return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Vec& a, const Vec& b) { return a.x() == b.x() && a.y() == b.y(); }),
              pts.end());
    const size_t m = pts.size();
    if (m < 3) return pts;
    std::vector<Vec> h(2 * m);
    size_t k = 0;
    for (size_t i = 0; i < m; ++i) {
        while (k >= 2 && cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    const size_t lower = k + 1;
    for (size_t i = m - 1; i-- > 0;) {
        while (k >= lower && cross2(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

}  // namespace

std::vector<ConvexBody> generate_bodies(const FamilySpec& spec, int n, uint64_t seed) {
    if (spec.count < 1) throw std::invalid_argument("generate_bodies: count must be positive");
    std::vector<ConvexBody> out;
    out.reserve(static_cast<size_t>(spec.count));
    auto sweep = [&](int i) {
        return spec.count == 1 ? spec.a_min : spec.a_min + (spec.a_max - spec.a_min) * i / (spec.count - 1.0);
    };

    for (int i = 0; i < spec.count; ++i) {
        if (spec.name == "polygons") {
            if (n != 2) throw std::invalid_argument("polygons family is 2D");
            Rng rng(Rng::mix(seed, static_cast<uint64_t>(i)));
            std::vector<Vec> h;
            for (int tries = 0; tries < 100 && h.size() < 3; ++tries) {
                std::vector<Vec> pts;
                for (int v = 0; v < spec.vertices; ++v) pts.push_back(rng.in_disk());
                h = hull2d(std::move(pts));
            }
            if (h.size() < 3) throw std::runtime_error("generate_bodies: degenerate polygon sample");
            out.push_back(ConvexBody::polygon(std::move(h)));
        } else if (spec.name == "polytopes") {
            if (n != 3) throw std::invalid_argument("polytopes family is 3D");
            Rng rng(Rng::mix(seed, static_cast<uint64_t>(i)));
            std::vector<Vec> pts;
            for (int v = 0; v < std::max(spec.vertices, 4); ++v) pts.push_back(rng.in_ball());
            out.push_back(ConvexBody::polytope3d(pts));
        } else if (spec.name == "ellipses") {
            if (n != 2) throw std::invalid_argument("ellipses family is 2D");
            const double a = sweep(i);
            out.push_back(ConvexBody::ellipsoid(Vec::xy(0, 0), {a, 1.0 / a}));
        } else if (spec.name == "ellipsoids") {
            if (n != 3) throw std::invalid_argument("ellipsoids family is 3D");
            const double a = sweep(i);
            out.push_back(ConvexBody::ellipsoid(Vec::xyz(0, 0, 0), {a, 1.0, 1.0 / a}));
        } else if (spec.name == "balls") {
            const double r = sweep(i);
            out.push_back(ConvexBody::ball(Vec::zero(n), r));
        } else if (spec.name == "fourier") {
            if (n != 2) throw std::invalid_argument("fourier family is 2D");
            Rng rng(Rng::mix(seed, static_cast<uint64_t>(i)));
            bool made = false;
            for (int tries = 0; tries < 1000 && !made; ++tries) {
                std::vector<std::array<double, 2>> ab(6, {0.0, 0.0});
                for (size_t j = 1; j < ab.size(); ++j) {  // skip j=1 harmonics (translations)
                    const double jj = static_cast<double>(j + 1);
                    ab[j] = {spec.amplitude * rng.uniform(-1.0, 1.0) / (jj * jj),
                             spec.amplitude * rng.uniform(-1.0, 1.0) / (jj * jj)};
                }
                try {
                    out.push_back(ConvexBody::fourier2d(1.0, std::move(ab)));
                    made = true;
                } catch (const std::invalid_argument&) {
                }
            }
            if (!made) throw std::runtime_error("generate_bodies: fourier amplitude makes every sample nonconvex");
        } else {
            throw std::invalid_argument("generate_bodies: unknown family '" + spec.name + "'");
        }
    }
    return out;
}

DeficitReport experiment_report(const ExperimentConfig& cfg, const ConvexBody& body, int body_index) {
    const int n = body.dim(), k = cfg.k;
    if (cfg.experiment == "steiner_check") {
        const SteinerCheck c =
            steiner_volume_check(body, 1.0, std::max<long>(cfg.samples, 100000),
                                 Rng::mix(cfg.seed, static_cast<uint64_t>(body_index)));
        DeficitReport rep;
        rep.name = "steiner_check";
        rep.n = n;
        rep.k = k;
        rep.alpha = hausdorff_asymmetry(body).alpha;
        rep.lhs = c.predicted;
        rep.rhs = c.estimated;
        rep.margin = rep.lhs - rep.rhs;
        rep.constants.emplace_back("stderr", c.stderr_);
        rep.status = c.pass() ? CheckStatus::pass : CheckStatus::fail;
        return rep;
    }
    if (cfg.experiment == "gs_bound") {
        // worst margin over all admissible pairs, mean-radii form
        DeficitReport worst;
        bool first = true;
        for (int i = 0; i < n - 1; ++i)
            for (int j = i + 1; j <= n - 1; ++j) {
                DeficitReport r = gs_bound_check(body, i, j, GsForm::mean_radii);
                if (first || r.margin < worst.margin) {
                    worst = r;
                    first = false;
                }
            }
        worst.name = "gs_bound";
        worst.k = k;
        return worst;
    }
    if (cfg.experiment == "propagation") {
        const AsymmetryRecord asym = hausdorff_asymmetry(body);
        const ShapeSummary s = shape_summary(body);
        const double d_r = asym.d_h_to_steiner_ball;
        const double D = s.diameter;
        if (d_r <= 1e-12 * asym.zeta_nm1) return propagation_check(body, body);
        const double eps = 0.9 * d_r / (2.0 * (n + 2.0) * D);
        return propagation_check(body, homothety(body, 1.0 - eps, s.steiner_point));
    }
    if (cfg.experiment == "polya_szego") {
        std::vector<double> invsq;
        if (const auto* b = body.as_ball())
            invsq.assign(static_cast<size_t>(n), 1.0 / (b->radius * b->radius));
        else if (const auto* e = body.as_ellipsoid())
            for (double a : e->a) invsq.push_back(1.0 / (a * a));
        else
            throw std::invalid_argument("polya_szego experiment needs balls or ellipsoids");
        const double kap = 0.5 * std::pow(cfg.fconst / s_k_eval(invsq, k), 1.0 / k);
        return polya_szego_report(ConvexTestFunction::quadratic_on_ellipsoid(body, kap), k);
    }
    const SourceField f = SourceField::constant(body, cfg.fconst);
    if (cfg.experiment == "talenti_gap") return talenti_gap_report(body, f, k);
    if (cfg.experiment == "hk_comparison") return hk_comparison_report(body, f, k);
    if (cfg.experiment == "pointwise_tso") return pointwise_tso_check(body, f, k);
    if (cfg.experiment == "faber_krahn") return faber_krahn_report(body, k);
    if (cfg.experiment == "saint_venant") return saint_venant_report(body, k);
    throw std::invalid_argument("unknown experiment '" + cfg.experiment + "'");
}

namespace {

std::string body_label(const FamilySpec& spec, int index) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d", index);
    return spec.name + "-" + buf;
}

}  // namespace

int run_experiment(const ExperimentConfig& cfg, std::ostream& diag) {
    if (cfg.k < 1 || cfg.k > cfg.n - 1) {
        diag << "error: need 1 <= k <= n-1 (got n=" << cfg.n << ", k=" << cfg.k << ")\n";
        return 1;
    }
    if (cfg.format != "csv" && cfg.format != "json") {
        diag << "error: unknown format '" << cfg.format << "'\n";
        return 1;
    }
    std::vector<ConvexBody> bodies;
    try {
        bodies = generate_bodies(cfg.family, cfg.n, cfg.seed);
    } catch (const std::exception& e) {
        diag << "error: " << e.what() << "\n";
        return 1;
    }

    const size_t m = bodies.size();
    std::vector<DeficitReport> rows(m);
    std::vector<std::string> errors(m);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const size_t i = next.fetch_add(1);
            if (i >= m) return;
            try {
                rows[i] = experiment_report(cfg, bodies[i], static_cast<int>(i));
            } catch (const std::exception& e) {
                errors[i] = e.what();
            }
        }
    };
    const unsigned hw = std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), 8u);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t + 1 < hw; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (size_t i = 0; i < m; ++i)
        if (!errors[i].empty()) {
            diag << "error: body " << body_label(cfg.family, static_cast<int>(i)) << ": " << errors[i] << "\n";
            return 1;
        }

    std::ostringstream os;
    if (cfg.format == "csv") {
        os << "body_id,n,k,alpha,lhs,rhs,margin,status\n";
        for (size_t i = 0; i < m; ++i) {
            const DeficitReport& r = rows[i];
            os << body_label(cfg.family, static_cast<int>(i)) << "," << r.n << "," << r.k << ","
               << format_double(r.alpha) << "," << format_double(r.lhs) << "," << format_double(r.rhs) << ","
               << format_double(r.margin) << "," << to_string(r.status) << "\n";
        }
    } else {
        os << "[";
        for (size_t i = 0; i < m; ++i) {
            if (i) os << ",";
            os << "\n  " << report_json(rows[i], body_label(cfg.family, static_cast<int>(i)));
        }
        os << "\n]\n";
    }

    if (cfg.out.empty()) {
        std::cout << os.str();
    } else {
        std::ofstream f(cfg.out, std::ios::binary);
        if (!f) {
            diag << "error: cannot open output file '" << cfg.out << "'\n";
            return 1;
        }
        f << os.str();
        if (!f.good()) {
            diag << "error: write failed for '" << cfg.out << "'\n";
            return 1;
        }
    }

    for (const DeficitReport& r : rows)
        if (r.status == CheckStatus::fail) return 2;
    return 0;
}

void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
    auto to_int = [&](const std::string& v) { return std::stoi(v); };
    if (key == "experiment")
        cfg.experiment = value;
    else if (key == "n")
        cfg.n = to_int(value);
    else if (key == "k")
        cfg.k = to_int(value);
    else if (key == "count")
        cfg.family.count = to_int(value);
    else if (key == "seed")
        cfg.seed = std::stoull(value);
    else if (key == "samples")
        cfg.samples = std::stol(value);
    else if (key == "fconst")
        cfg.fconst = std::stod(value);
    else if (key == "out")
        cfg.out = value;
    else if (key == "format")
        cfg.format = value;
    else if (key == "family")
        cfg.family.name = value;
    else if (key == "family.vertices")
        cfg.family.vertices = to_int(value);
    else if (key == "family.amplitude")
        cfg.family.amplitude = std::stod(value);
    else if (key == "family.a_min")
        cfg.family.a_min = std::stod(value);
    else if (key == "family.a_max")
        cfg.family.a_max = std::stod(value);
    else
        throw std::invalid_argument("unknown config key '" + key + "'");
}

bool parse_config_file(const std::string& path, ExperimentConfig& cfg, std::string& error) {
    std::ifstream f(path);
    if (!f) {
        error = "cannot open config file '" + path + "'";
        return false;
    }
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto trim = [](std::string s) {
            const size_t b = s.find_first_not_of(" \t\r");
            const size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            error = "line " + std::to_string(lineno) + ": expected key=value";
            return false;
        }
        try {
            apply_setting(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
        } catch (const std::exception& e) {
            error = "line " + std::to_string(lineno) + ": " + e.what();
            return false;
        }
    }
    return true;
}

}  // namespace hsymm
