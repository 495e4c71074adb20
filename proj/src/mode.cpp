#include "qlens/mode.hpp"

#include <cmath>

#include "qlens/errors.hpp"

namespace qlens {

double coupling(const AtomFieldConfig& cfg, double x) {
    const double s = std::sin(cfg.wavenumber * (x - cfg.mode_offset));
    return cfg.g_max * s * s;
}

ModeExpansion mode_expand(const AtomFieldConfig& cfg) {
    const double k = cfg.wavenumber;
    const double kx0 = k * cfg.mode_offset;
    const double s = std::sin(kx0);
    const double c2 = std::cos(2.0 * kx0);

    ModeExpansion exp;
    exp.g0 = cfg.g_max * s * s;
    exp.g1 = -cfg.g_max * k * std::sin(2.0 * kx0);
    exp.g2 = 2.0 * cfg.g_max * k * k * c2;
    if (std::abs(c2) < 1e-12)
        throw DegenerateCurvature();
    exp.x_f = -exp.g1 / exp.g2;
    return exp;
}

}  // namespace qlens
