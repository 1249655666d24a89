#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hsymm/convex_core.hpp"
#include "hsymm/report.hpp"

namespace hsymm {

// Body generator parameters. `name` selects the family:
//   polygons    convex hulls of `vertices` uniform points in the unit disk (n=2)
//   polytopes   convex hulls of `vertices` uniform points in the unit ball (n=3)
//   ellipses    area-pi ellipses, semi-axis a swept over [a_min, a_max] (n=2)
//   ellipsoids  volume-normalized ellipsoids with axes (a, 1, 1/a) (n=3)
//   fourier     support perturbations 1 + amplitude * trig noise (n=2)
//   balls       radii swept over [a_min, a_max]
struct FamilySpec {
    std::string name = "ellipses";
    int count = 10;
    int vertices = 20;
    double amplitude = 0.05;
    double a_min = 1.05;
    double a_max = 1.6;
};

struct ExperimentConfig {
    std::string experiment;  // gs_bound, steiner_check, propagation, polya_szego,
                             // talenti_gap, hk_comparison, pointwise_tso,
                             // faber_krahn, saint_venant
    int n = 2;
    int k = 1;
    FamilySpec family;
    uint64_t seed = 1;
    long samples = 100000;
    double fconst = 2.0;  // constant source for explicit-solution experiments
    std::string out;      // empty: stdout
    std::string format = "csv";
};

// Deterministic: identical spec and seed produce identical bodies.
std::vector<ConvexBody> generate_bodies(const FamilySpec& spec, int n, uint64_t seed);

// Runs the configured experiment over the family, one report row per body,
// rows ordered by body index regardless of the worker fan-out.
// Exit status: 0 clean, 1 configuration/I-O error, 2 at least one failed check.
int run_experiment(const ExperimentConfig& cfg, std::ostream& diagnostics);

// Line-oriented key=value config file; '#' starts a comment.
bool parse_config_file(const std::string& path, ExperimentConfig& cfg, std::string& error);

// Apply a single key=value setting (used by the config parser and the CLI).
void apply_setting(ExperimentConfig& cfg, const std::string& key, const std::string& value);

// The per-body report used by run_experiment (exposed for the acceptance
// suite). Monte-Carlo experiments derive their stream from (seed, body_index).
DeficitReport experiment_report(const ExperimentConfig& cfg, const ConvexBody& body, int body_index);

std::string format_double(double v);  // 17 significant digits

}  // namespace hsymm
