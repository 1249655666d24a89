#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "hsymm/experiment.hpp"
#include "hsymm/quermass.hpp"

using namespace hsymm;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

int run_cmd(const std::string& cmd) {
    const int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

}  // namespace

TEST_CASE("generate_bodies: determinism and family contracts") {
    FamilySpec spec;
    spec.name = "polygons";
    spec.count = 5;
    spec.vertices = 20;
    const auto a = generate_bodies(spec, 2, 7);
    const auto b = generate_bodies(spec, 2, 7);
    REQUIRE(a.size() == 5);
    for (size_t i = 0; i < a.size(); ++i) {
        const auto& va = a[i].as_polygon()->v;
        const auto& vb = b[i].as_polygon()->v;
        REQUIRE(va.size() == vb.size());
        for (size_t j = 0; j < va.size(); ++j) {
            CHECK(va[j].x() == vb[j].x());  // bit-identical
            CHECK(va[j].y() == vb[j].y());
        }
    }
    const auto c = generate_bodies(spec, 2, 8);
    CHECK(c[0].as_polygon()->v.size() > 0);

    FamilySpec es;
    es.name = "ellipses";
    es.count = 3;
    es.a_min = 1.0;
    es.a_max = 1.2;
    const auto ells = generate_bodies(es, 2, 1);
    REQUIRE(ells.size() == 3);
    // first body of the sweep is the unit disk
    for (int i = 0; i < 8; ++i)
        CHECK(ells[0].support(Direction::angle(0.7 * i)) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(quermassintegrals(ells[2]).w[0] == doctest::Approx(3.14159265358979).epsilon(1e-10));

    FamilySpec fs;
    fs.name = "fourier";
    fs.count = 10;
    fs.amplitude = 0.05;
    const auto fb = generate_bodies(fs, 2, 3);
    for (const ConvexBody& bdy : fb) {
        const FourierData* fd = bdy.as_fourier();
        REQUIRE(fd != nullptr);
        double min_cr = 1e300;
        for (int i = 0; i < 1024; ++i)
            min_cr = std::min(min_cr, fd->curvature_radius(2.0 * 3.14159265358979 * i / 1024.0));
        CHECK(min_cr > 0.0);
    }

    FamilySpec bad;
    bad.name = "nonesuch";
    CHECK_THROWS_AS(generate_bodies(bad, 2, 1), std::invalid_argument);
    FamilySpec impossible;
    impossible.name = "fourier";
    impossible.count = 1;
    impossible.amplitude = 50.0;  // every sample violates convexity
    CHECK_THROWS_AS(generate_bodies(impossible, 2, 1), std::runtime_error);
}

TEST_CASE("run_experiment: csv schema, determinism, exit codes") {
    ExperimentConfig cfg;
    cfg.experiment = "gs_bound";
    cfg.family.name = "polygons";
    cfg.family.count = 20;
    cfg.n = 2;
    cfg.k = 1;
    cfg.seed = 1;
    cfg.out = "/tmp/hsymm_gs_a.csv";
    std::ostringstream diag;
    CHECK(run_experiment(cfg, diag) == 0);
    cfg.out = "/tmp/hsymm_gs_b.csv";
    CHECK(run_experiment(cfg, diag) == 0);
    const std::string a = slurp("/tmp/hsymm_gs_a.csv");
    CHECK(a == slurp("/tmp/hsymm_gs_b.csv"));  // byte-identical reruns
    CHECK(a.substr(0, a.find('\n')) == "body_id,n,k,alpha,lhs,rhs,margin,status");
    size_t rows = 0;
    for (char ch : a) rows += ch == '\n';
    CHECK(rows == 21);  // header + one row per body
    CHECK(a.find("fail") == std::string::npos);

    cfg.format = "json";
    cfg.out = "/tmp/hsymm_gs.json";
    CHECK(run_experiment(cfg, diag) == 0);
    const std::string js = slurp("/tmp/hsymm_gs.json");
    CHECK(js.find("\"name\":\"gs_bound\"") != std::string::npos);
    CHECK(js.find("\"body_id\":\"polygons-0007\"") != std::string::npos);

    // configuration errors exit 1
    ExperimentConfig bad = cfg;
    bad.k = 5;
    CHECK(run_experiment(bad, diag) == 1);
    bad = cfg;
    bad.format = "xml";
    CHECK(run_experiment(bad, diag) == 1);
    bad = cfg;
    bad.experiment = "unknown";
    CHECK(run_experiment(bad, diag) == 1);
    bad = cfg;
    bad.out = "/nonexistent-dir/x.csv";
    CHECK(run_experiment(bad, diag) == 1);
}

TEST_CASE("experiments by family") {
    std::ostringstream diag;
    ExperimentConfig cfg;
    cfg.experiment = "saint_venant";
    cfg.family.name = "ellipses";
    cfg.family.count = 4;
    cfg.family.a_min = 1.05;
    cfg.family.a_max = 1.5;
    cfg.out = "/tmp/hsymm_sv.csv";
    CHECK(run_experiment(cfg, diag) == 0);

    cfg.experiment = "propagation";
    cfg.family.name = "polygons";
    cfg.family.count = 8;
    cfg.out = "/tmp/hsymm_prop.csv";
    CHECK(run_experiment(cfg, diag) == 0);

    cfg.experiment = "talenti_gap";
    cfg.family.name = "ellipsoids";
    cfg.n = 3;
    cfg.k = 2;
    cfg.family.count = 3;
    cfg.out = "/tmp/hsymm_tal.csv";
    CHECK(run_experiment(cfg, diag) == 0);

    cfg.experiment = "steiner_check";
    cfg.family.name = "polygons";
    cfg.n = 2;
    cfg.k = 1;
    cfg.family.count = 3;
    cfg.samples = 120000;
    cfg.out = "/tmp/hsymm_steiner.csv";
    CHECK(run_experiment(cfg, diag) == 0);
    const std::string sc = slurp("/tmp/hsymm_steiner.csv");
    CHECK(sc.find("fail") == std::string::npos);
    size_t sc_rows = 0;
    for (char ch : sc) sc_rows += ch == '\n';
    CHECK(sc_rows == 4);

    // explicit-solution experiments reject families without one
    cfg.experiment = "talenti_gap";
    cfg.family.name = "polygons";
    cfg.n = 2;
    cfg.k = 1;
    CHECK(run_experiment(cfg, diag) == 1);
}

TEST_CASE("config file parsing with flag-style overrides") {
    const char* path = "/tmp/hsymm_cfg.txt";
    {
        std::ofstream f(path);
        f << "# experiment configuration\n"
          << "experiment=gs_bound\n"
          << "family=polygons\n"
          << "n=2\nk=1\ncount=4\nseed=9\n"
          << "family.vertices=10\n"
          << "out=/tmp/hsymm_cfg_out.csv\n";
    }
    ExperimentConfig cfg;
    std::string err;
    REQUIRE(parse_config_file(path, cfg, err));
    CHECK(cfg.experiment == "gs_bound");
    CHECK(cfg.family.count == 4);
    CHECK(cfg.family.vertices == 10);
    CHECK(cfg.seed == 9);
    apply_setting(cfg, "count", "6");  // CLI flag overrides file value
    CHECK(cfg.family.count == 6);
    CHECK_THROWS_AS(apply_setting(cfg, "bogus", "1"), std::invalid_argument);

    {
        std::ofstream f(path);
        f << "no_equals_sign_here\n";
    }
    CHECK(!parse_config_file(path, cfg, err));
    CHECK(!err.empty());
}

TEST_CASE("command line binary end to end") {
    const std::string exe = HSYMM_CLI_PATH;

    CHECK(run_cmd(exe + " constants --n 2 --k 1 > /tmp/hsymm_const.txt 2>/dev/null") == 0);
    const std::string consts = slurp("/tmp/hsymm_const.txt");
    CHECK(consts.find("beta_n=0.0012665147955292222") != std::string::npos);
    CHECK(consts.find("omega_n=3.14159") != std::string::npos);
    CHECK(consts.find("C2_stated=") != std::string::npos);

    CHECK(run_cmd(exe +
                  " run --experiment gs_bound --family polygons --n 2 --count 6 --seed 1"
                  " --out /tmp/hsymm_cli_gs.csv 2>/dev/null") == 0);
    const std::string csv = slurp("/tmp/hsymm_cli_gs.csv");
    CHECK(csv.substr(0, csv.find('\n')) == "body_id,n,k,alpha,lhs,rhs,margin,status");

    CHECK(run_cmd(exe + " run --experiment saint_venant --family ellipses --n 2 --k 1 --count 3"
                        " --format json --out /tmp/hsymm_cli_sv.json 2>/dev/null") == 0);
    CHECK(slurp("/tmp/hsymm_cli_sv.json").find("\"status\":\"pass\"") != std::string::npos);

    CHECK(run_cmd(exe + " profile-dump --kind radial --n 2 --k 1 --fconst 2 --resolution 16"
                        " --out /tmp/hsymm_prof.csv 2>/dev/null") == 0);
    const std::string prof = slurp("/tmp/hsymm_prof.csv");
    CHECK(prof.substr(0, prof.find('\n')) == "r,u0,f0");

    // malformed flag: exit 1 with usage text
    CHECK(run_cmd(exe + " run --no-such-flag > /dev/null 2> /tmp/hsymm_err.txt") == 1);
    CHECK(run_cmd(exe + " > /dev/null 2>&1") == 1);
}
