#include "qlens/gaussian.hpp"

#include <cmath>

#include "qlens/errors.hpp"
#include "qlens/lens.hpp"

namespace qlens {

namespace {

// Continuous angle of C(t) + i S(t)/tau0, zero at t = 0, strictly increasing.
// For the trig branch the principal arctan is discontinuous at every
// half-period of Omega_n t; reduce the angle first and add back k*pi.
double cavity_theta(const FockChannel& ch, const AtomFieldConfig& cfg, double t) {
    const double tau0 = cfg.rayleigh_time;
    if (ch.omega_sq > 0) {
        const double wt = ch.omega * t;
        const double k = std::floor(wt / kPi + 0.5);
        const double psi = wt - k * kPi;
        return k * kPi + std::atan2(std::sin(psi), ch.omega * tau0 * std::cos(psi));
    }
    if (ch.omega_sq < 0)
        return std::atan(std::tanh(ch.omega * t) / (ch.omega * tau0));
    return std::atan(t / tau0);
}

}  // namespace

GaussianParams evolve_in_cavity(const FockChannel& ch, const ModeExpansion& exp,
                                const AtomFieldConfig& cfg, double t) {
    if (t < 0 || t > cfg.interaction_time)
        throw OutOfStage("in-cavity stage requires 0 <= t <= t_L");

    const double tau0 = cfg.rayleigh_time;
    const double b0 = cfg.beam_width;
    const Phase ph = harmonic_phase(ch.omega_sq, t);
    const double den = ph.c * ph.c + (ph.s / tau0) * (ph.s / tau0);

    GaussianParams out;
    out.t = t;
    out.xbar = -exp.x_f * ph.c;
    out.pbar = cfg.mass * exp.x_f * ch.omega_sq * ph.s;
    out.u = 1.0 / (b0 * b0 * den);
    out.v = (cfg.mass / cfg.hbar) * (ch.omega_sq - 1.0 / (tau0 * tau0)) * ph.s * ph.c / den;
    out.mu = -0.5 * cavity_theta(ch, cfg, t);
    return out;
}

GaussianParams evolve_free(const FockChannel& ch, const ModeExpansion& exp,
                           const AtomFieldConfig& cfg, double t) {
    const double t_L = cfg.interaction_time;
    if (t < t_L)
        throw OutOfStage("free stage requires t >= t_L");

    const double tau0 = cfg.rayleigh_time;
    const double b0 = cfg.beam_width;
    const double dt = t - t_L;
    const double c = ch.at_exit.c;
    const double s = ch.at_exit.s;

    const double a = c - ch.omega_sq * dt * s;
    const double b = (s + dt * c) / tau0;
    const double den = a * a + b * b;

    GaussianParams out;
    out.t = t;
    out.xbar = exp.x_f * (-c + ch.omega_sq * s * dt);
    out.pbar = cfg.mass * exp.x_f * ch.omega_sq * s;
    out.u = 1.0 / (b0 * b0 * den);
    out.v = (cfg.mass / cfg.hbar) * (ch.omega_sq * s * a - b * c / tau0) / den;
    out.mu = gouy_phase(ch, cfg, t);
    return out;
}

GaussianParams evolve(const FockChannel& ch, const ModeExpansion& exp,
                      const AtomFieldConfig& cfg, double t) {
    if (t <= cfg.interaction_time)
        return evolve_in_cavity(ch, exp, cfg, t);
    return evolve_free(ch, exp, cfg, t);
}

double beam_width(const FockChannel& ch, const AtomFieldConfig& cfg, double t) {
    if (t < cfg.interaction_time)
        throw OutOfStage("beam_width is a post-lens quantity (t >= t_L)");
    return lens_width(make_lens(ch, cfg), t);
}

double gouy_phase(const FockChannel& ch, const AtomFieldConfig& cfg, double t) {
    if (t < 0)
        throw OutOfStage("Gouy phase requires t >= 0");
    const double t_L = cfg.interaction_time;
    if (t <= t_L)
        return -0.5 * cavity_theta(ch, cfg, t);

    // Post-lens width is b0'[1 + ((t - t_f)/tau0')^2]^(1/2); integrating
    // d(mu)/dt = -hbar u/(2m) from t_L gives an arctan increment.
    const LensResult lens = make_lens(ch, cfg);
    const double mu_exit = -0.5 * cavity_theta(ch, cfg, t_L);
    const double a1 = std::atan((t - lens.t_f) / lens.rayleigh_time);
    const double a0 = std::atan((t_L - lens.t_f) / lens.rayleigh_time);
    return mu_exit - 0.5 * (a1 - a0);
}

}  // namespace qlens
