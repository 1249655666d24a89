#pragma once

#include <cstdint>

#include "hsymm/vec.hpp"

namespace hsymm {

// SplitMix64: tiny deterministic generator with a fixed cross-platform output
// stream. We avoid std::uniform_real_distribution on purpose: its output is
// implementation-defined and would break byte-identical artifacts.
class Rng {
public:
    explicit Rng(uint64_t seed) : state_(seed) {}

    uint64_t next_u64() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // uniform point in the unit disk
    Vec in_disk() {
        const double r = std::sqrt(uniform());
        const double t = 2.0 * M_PI * uniform();
        return Vec::xy(r * std::cos(t), r * std::sin(t));
    }

    // uniform point in the unit ball (3D)
    Vec in_ball() {
        const double r = std::cbrt(uniform());
        const double z = 2.0 * uniform() - 1.0;
        const double phi = 2.0 * M_PI * uniform();
        const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        return Vec::xyz(r * s * std::cos(phi), r * s * std::sin(phi), r * z);
    }

    // derive an independent stream for item `index` of a seeded family
    static uint64_t mix(uint64_t seed, uint64_t index) {
        Rng g(seed ^ (0x9e3779b97f4a7c15ull * (index + 1)));
        return g.next_u64();
    }

private:
    uint64_t state_;
};

}  // namespace hsymm
