#pragma once

#include <limits>

#include "qlens/config.hpp"
#include "qlens/mode.hpp"

namespace qlens {

// Harmonic propagator pair, continuous in omega_sq through zero:
//   omega_sq > 0: c = cos(w t),  s = sin(w t)/w
//   omega_sq = 0: c = 1,         s = t
//   omega_sq < 0: c = cosh(w t), s = sinh(w t)/w   (w = sqrt(|omega_sq|))
struct Phase {
    double c = 1;
    double s = 0;
};

Phase harmonic_phase(double omega_sq, double t);

// Per-photon-number channel quantities.  The signed omega_sq together with the
// exit-time propagator pair drives every closed form; b_n/tau_n/phi_n are the
// conventional display quantities (infinite for n = 0).
struct FockChannel {
    int n = 0;
    double omega_sq = 0;  // Omega_n^2 = n g2 / m [1/s^2], sign of g2
    double omega = 0;     // sqrt(|omega_sq|) [rad/s]
    double b_n = std::numeric_limits<double>::infinity();    // sqrt(hbar/(m omega)) [m]
    double tau_n = std::numeric_limits<double>::infinity();  // m b_n^2 / hbar = 1/omega [s]
    double phi_n = 0;     // omega t_L [rad]
    bool expulsive = false;  // g2 < 0 (antinode on axis)
    Phase at_exit;           // propagator pair at t = t_L
};

FockChannel make_channel(const AtomFieldConfig& cfg, const ModeExpansion& exp, int n);

}  // namespace qlens
