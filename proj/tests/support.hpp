#pragma once

#include <cmath>
#include <random>
#include <string>

#include "qlens/config.hpp"
#include "qlens/constants.hpp"

namespace qlens_test {

using namespace qlens;

// Cesium 6S1/2 - 7P1/2 example set.
inline AtomFieldConfig cs_config() {
    AtomFieldConfig cfg;
    cfg.mass = 2.2e-25;
    cfg.wavelength = 459e-9;
    cfg.rabi_frequency = 2.0 * kPi * 0.67e6;
    cfg.detuning = 4.2e8;
    cfg.cavity_length = 100e-6;
    cfg.velocity = 300.0;
    cfg.beam_width = 1.53e-7;  // lambda/3
    cfg.distribution_kind = DistributionKind::coherent;
    cfg.distribution_parameter = 5.0;
    return validate_config(cfg);
}

// Config whose channel n_target hits (phi_n, b_n^2/b0^2) = (phi, r) exactly,
// realized through the g_max override.  Negative `sign` gives an expulsive
// coupling with |Omega_n| matching the same targets.
inline AtomFieldConfig synth_config(double phi, double r, int n_target,
                                    double b0 = 1.5e-7, double mass = 2.2e-25,
                                    double vz = 300.0, int sign = +1,
                                    double mode_offset = 0.0) {
    AtomFieldConfig cfg;
    cfg.mass = mass;
    cfg.beam_width = b0;
    cfg.wavelength = 6.0 * b0;
    cfg.velocity = vz;
    cfg.rabi_frequency = 1e6;  // unused under the override
    cfg.detuning = 1e8;
    cfg.mode_offset = mode_offset;
    const double tau0 = mass * b0 * b0 / kHbar;
    const double omega = 1.0 / (r * tau0);
    cfg.cavity_length = vz * (phi / omega);
    const double k = 2.0 * kPi / cfg.wavelength;
    const double curvature = std::cos(2.0 * k * mode_offset);
    cfg.g_max = sign * mass * omega * omega / (2.0 * k * k * n_target * curvature);
    cfg.g_max_overridden = true;
    return validate_config(cfg);
}

inline double rel_err(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return scale == 0 ? 0.0 : std::abs(a - b) / scale;
}

}  // namespace qlens_test
