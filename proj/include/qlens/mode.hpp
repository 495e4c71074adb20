#pragma once

#include "qlens/config.hpp"

namespace qlens {

// Quadratic expansion of the coupling around the beam axis:
//   g(x) ~ g0 + g1 x + (1/2) g2 x^2,  minimum shifted to x_f = -g1/g2.
struct ModeExpansion {
    double g0 = 0;   // g(0) [J]
    double g1 = 0;   // g'(0) [J/m]
    double g2 = 0;   // g''(0) [J/m^2]; > 0 focusing, < 0 expulsive
    double x_f = 0;  // -g1/g2 [m]
};

// g(x) = g_max sin^2(k (x - x0)).
double coupling(const AtomFieldConfig& cfg, double x);

// Analytic derivatives of g at x = 0.  Throws DegenerateCurvature when
// cos(2 k x0) vanishes (inflection point, no harmonic lens).
ModeExpansion mode_expand(const AtomFieldConfig& cfg);

}  // namespace qlens
