#pragma once

#include <string>
#include <utility>
#include <vector>

namespace hsymm {

enum class CheckStatus { pass, fail, vacuous, bound_only };

const char* to_string(CheckStatus s);

// One inequality check: left side, right side, margin, asymmetry, constants
// used, status. `vacuous` marks checks whose both sides vanish (balls) or
// whose hypothesis is not met; `bound_only` marks checks that report the
// bound without an independently computable left side.
struct DeficitReport {
    std::string name;
    int n = 0;
    int k = 0;
    double alpha = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    CheckStatus status = CheckStatus::pass;
    std::vector<std::pair<std::string, double>> constants;
    std::string note;

    bool passed() const { return status != CheckStatus::fail; }
};

}  // namespace hsymm
