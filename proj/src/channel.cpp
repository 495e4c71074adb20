#include "qlens/channel.hpp"

#include <cmath>

#include "qlens/errors.hpp"

namespace qlens {

Phase harmonic_phase(double omega_sq, double t) {
    const double z = omega_sq * t * t;
    if (std::abs(z) < 1e-6) {
        // One series covers both signs: z > 0 is the trig pair, z < 0 hyperbolic.
        const double c = 1.0 - z / 2.0 + z * z / 24.0 - z * z * z / 720.0;
        const double s = t * (1.0 - z / 6.0 + z * z / 120.0 - z * z * z / 5040.0);
        return {c, s};
    }
    const double w = std::sqrt(std::abs(omega_sq));
    if (omega_sq > 0)
        return {std::cos(w * t), std::sin(w * t) / w};
    return {std::cosh(w * t), std::sinh(w * t) / w};
}

FockChannel make_channel(const AtomFieldConfig& cfg, const ModeExpansion& exp, int n) {
    if (n < 0)
        throw NegativeParameter("photon number");
    FockChannel ch;
    ch.n = n;
    ch.omega_sq = n * exp.g2 / cfg.mass;
    ch.omega = std::sqrt(std::abs(ch.omega_sq));
    ch.expulsive = exp.g2 < 0;
    if (ch.omega > 0) {
        ch.b_n = std::sqrt(cfg.hbar / (cfg.mass * ch.omega));
        ch.tau_n = cfg.mass * ch.b_n * ch.b_n / cfg.hbar;
        ch.phi_n = ch.omega * cfg.interaction_time;
    }
    ch.at_exit = harmonic_phase(ch.omega_sq, cfg.interaction_time);
    return ch;
}

}  // namespace qlens
