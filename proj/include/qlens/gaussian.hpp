#pragma once

#include "qlens/channel.hpp"

namespace qlens {

// Gaussian wavepacket parameters at time t.  The packet is
//   psi(x) ~ (u/pi)^(1/4) exp(i mu - i xbar pbar/(2 hbar))
//            exp(-(x - xbar)^2 (u + i v)/2 + i pbar x / hbar)
// with u = 1/width^2 > 0, v the wavefront curvature, mu the Gouy phase.
// xbar is measured from the potential minimum x_f (the lab-frame centroid is
// xbar + x_f); the same origin is kept in free flight so all parameters are
// continuous at t_L.
struct GaussianParams {
    double xbar = 0;  // [m]
    double pbar = 0;  // [kg m/s]
    double u = 0;     // [1/m^2]
    double v = 0;     // [1/m^2]
    double mu = 0;    // [rad]
    double t = 0;     // [s]
};

// Closed forms inside the cavity, t in [0, t_L].  Initial state: centroid on
// the beam axis (xbar = -x_f), at rest, width b_0, flat wavefront, mu = 0.
GaussianParams evolve_in_cavity(const FockChannel& ch, const ModeExpansion& exp,
                                const AtomFieldConfig& cfg, double t);

// Free-flight closed forms, t >= t_L.  Matches evolve_in_cavity at t = t_L in
// all five parameters.
GaussianParams evolve_free(const FockChannel& ch, const ModeExpansion& exp,
                           const AtomFieldConfig& cfg, double t);

// Stage dispatch on t.
GaussianParams evolve(const FockChannel& ch, const ModeExpansion& exp,
                      const AtomFieldConfig& cfg, double t);

// Width via the focal-parameter route, t >= t_L; equals u(t)^(-1/2) from
// evolve_free (two routes to the same number).
double beam_width(const FockChannel& ch, const AtomFieldConfig& cfg, double t);

// Gouy phase; satisfies d(mu)/dt = -hbar u / (2 m), continuous across the
// tan(Omega_n t) poles, strictly decreasing.
double gouy_phase(const FockChannel& ch, const AtomFieldConfig& cfg, double t);

}  // namespace qlens
