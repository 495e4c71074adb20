#pragma once

#include <string>
#include <vector>

#include "qlens/config.hpp"

namespace qlens {

struct CheckResult {
    std::string name;
    double measured = 0;   // worst observed error
    double threshold = 0;  // pass bound
    bool pass = false;
    double seconds = 0;
};

enum class VerifyLevel { quick, full };

// Oracle comparison battery for one configuration: adaptive RK4 vs the closed
// forms, golden-section focal search vs the focal formula, covariance-route
// quality factor vs the double sum, split-step grid vs closed forms, and the
// purity double sum vs grid overlaps.  `full` adds the sinusoidal-potential
// vs harmonic-surrogate width budget.
std::vector<CheckResult> run_verification(const AtomFieldConfig& cfg, VerifyLevel level);

}  // namespace qlens
