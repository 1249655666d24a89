// Command-line driver: experiment runner, constants dump, profile dump.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "hsymm/experiment.hpp"
#include "hsymm/khessian.hpp"
#include "hsymm/stability.hpp"
#include "hsymm/symmetrize.hpp"
#include "hsymm/verify.hpp"

using namespace hsymm;

int main(int argc, char** argv) {
    CLI::App app{"quermassintegral symmetrization toolkit"};
    app.require_subcommand(1);

    // --- run ---------------------------------------------------------------
    auto* run = app.add_subcommand("run", "run an experiment over a body family");
    std::string experiment, family, out, format, config_path;
    int n = 0, k = 0, count = 0;
    std::uint64_t seed = 0;
    long samples = 0;
    double fconst = 0.0, amplitude = 0.0, a_min = 0.0, a_max = 0.0;
    int vertices = 0;
    run->add_option("--experiment", experiment, "gs_bound, propagation, polya_szego, talenti_gap, hk_comparison, pointwise_tso, faber_krahn, saint_venant");
    run->add_option("--family", family, "polygons, polytopes, ellipses, ellipsoids, fourier, balls");
    run->add_option("--n", n, "dimension");
    run->add_option("--k", k, "Hessian order");
    run->add_option("--count", count, "number of bodies");
    run->add_option("--seed", seed, "random seed");
    run->add_option("--samples", samples, "Monte-Carlo samples");
    run->add_option("--fconst", fconst, "constant source value");
    run->add_option("--vertices", vertices, "sample points per polytope");
    run->add_option("--amplitude", amplitude, "fourier perturbation amplitude");
    run->add_option("--a-min", a_min, "sweep lower bound");
    run->add_option("--a-max", a_max, "sweep upper bound");
    run->add_option("--out", out, "output path (default stdout)");
    run->add_option("--format", format, "csv or json");
    run->add_option("--config", config_path, "key=value config file (flags override)");

    // --- constants ---------------------------------------------------------
    auto* consts = app.add_subcommand("constants", "dump the constants table as key=value lines");
    int cn = 2, ck = 1;
    consts->add_option("--n", cn, "dimension")->required();
    consts->add_option("--k", ck, "Hessian order")->required();

    // --- profile-dump ------------------------------------------------------
    auto* dump = app.add_subcommand("profile-dump", "write a radial profile as CSV");
    std::string kind = "radial", dump_out;
    int dn = 2, dk = 1, resolution = 256;
    double da = 1.2, dfconst = 2.0, dradius = 1.0;
    dump->add_option("--kind", kind, "radial (r,u0,f0), symmetrand (r,value), eigen (r,value)");
    dump->add_option("--n", dn, "dimension");
    dump->add_option("--k", dk, "Hessian order");
    dump->add_option("--a", da, "ellipse/ellipsoid semi-axis for symmetrand");
    dump->add_option("--fconst", dfconst, "constant source value");
    dump->add_option("--radius", dradius, "ball radius");
    dump->add_option("--resolution", resolution, "rows in the dump");
    dump->add_option("--out", dump_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);  // prints usage/diagnostic
        return code == 0 ? 0 : 1;
    }

    try {
        if (consts->parsed()) {
            const ConstantsTable t = constants_table(cn, ck);
            for (const auto& [key, value] : t.entries()) std::printf("%s=%s\n", key.c_str(), format_double(value).c_str());
            return 0;
        }

        if (dump->parsed()) {
            std::ostringstream os;
            if (kind == "radial") {
                const RadialSource f0([dfconst](double) { return dfconst; });
                const RadialSolution sol = radial_solution(f0, dradius, dn, dk);
                os << "r,u0,f0\n";
                for (int i = 0; i <= resolution; ++i) {
                    const double r = dradius * i / resolution;
                    os << format_double(r) << "," << format_double(sol.value(r)) << "," << format_double(f0.f(r)) << "\n";
                }
            } else if (kind == "symmetrand") {
                std::vector<double> axes;
                if (dn == 2)
                    axes = {da, 1.0 / da};
                else if (dn == 3)
                    axes = {da, 1.0, 1.0 / da};
                else
                    throw std::invalid_argument("symmetrand dump: n must be 2 or 3");
                const ConvexBody body = ConvexBody::ellipsoid(Vec::zero(dn), axes);
                const ConvexTestFunction u = ConvexTestFunction::quadratic_on_ellipsoid(body, dfconst);
                const RadialProfile prof = symmetrand(u, dk);
                os << "r,value\n";
                for (int i = 0; i <= resolution; ++i) {
                    const double r = prof.radius() * i / resolution;
                    os << format_double(r) << "," << format_double(prof(r)) << "\n";
                }
            } else if (kind == "eigen") {
                const RadialEigenResult e = radial_eigen(dn, dk, dradius);
                std::cerr << "sigma=" << format_double(e.sigma) << "\n";
                const RadialProfile prof = e.profile();
                os << "r,value\n";
                for (int i = 0; i <= resolution; ++i) {
                    const double r = dradius * i / resolution;
                    os << format_double(r) << "," << format_double(prof(r)) << "\n";
                }
            } else {
                throw std::invalid_argument("profile-dump: unknown kind '" + kind + "'");
            }
            if (dump_out.empty()) {
                std::cout << os.str();
            } else {
                std::ofstream f(dump_out, std::ios::binary);
                if (!f) throw std::runtime_error("cannot open '" + dump_out + "'");
                f << os.str();
            }
            return 0;
        }

        // run
        ExperimentConfig cfg;
        if (!config_path.empty()) {
            std::string err;
            if (!parse_config_file(config_path, cfg, err)) {
                std::cerr << "error: " << err << "\n";
                return 1;
            }
        }
        if (run->count("--experiment")) cfg.experiment = experiment;
        if (run->count("--family")) cfg.family.name = family;
        if (run->count("--n")) cfg.n = n;
        if (run->count("--k")) cfg.k = k;
        if (run->count("--count")) cfg.family.count = count;
        if (run->count("--seed")) cfg.seed = seed;
        if (run->count("--samples")) cfg.samples = samples;
        if (run->count("--fconst")) cfg.fconst = fconst;
        if (run->count("--vertices")) cfg.family.vertices = vertices;
        if (run->count("--amplitude")) cfg.family.amplitude = amplitude;
        if (run->count("--a-min")) cfg.family.a_min = a_min;
        if (run->count("--a-max")) cfg.family.a_max = a_max;
        if (run->count("--out")) cfg.out = out;
        if (run->count("--format")) cfg.format = format;
        if (cfg.experiment.empty()) {
            std::cerr << "error: --experiment is required\n" << run->help();
            return 1;
        }
        return run_experiment(cfg, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
