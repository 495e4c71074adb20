#include "qlens/lens.hpp"

#include <cmath>

#include "qlens/errors.hpp"

namespace qlens {

ThinLens thin_lens(const FockChannel& ch, const AtomFieldConfig& cfg) {
    const double t_L = cfg.interaction_time;
    const double tau0 = cfg.rayleigh_time;
    ThinLens thin;
    // 1/(Omega_n^2 t_L) equals m Delta / (hbar Omega_0^2 k^2 t_L n) under the
    // default coupling amplitude.
    thin.t_f = t_L + 1.0 / (ch.omega_sq * t_L);
    const double q = ch.omega_sq * tau0 * t_L;  // (b0/b_n)^4 phi_n^2 = q^2
    thin.magnification = 1.0 / std::sqrt(1.0 + q * q);
    if (ch.n >= 1) {
        thin.ok_phi = ch.phi_n < 0.1;
        thin.ok_squeeze = q > 1.0;  // (b_n/b0)^4 < phi_n^2
    }
    return thin;
}

LensResult make_lens(const FockChannel& ch, const AtomFieldConfig& cfg, LensModel model) {
    const double t_L = cfg.interaction_time;
    const double tau0 = cfg.rayleigh_time;

    LensResult lens;
    lens.n = ch.n;
    lens.expulsive = ch.expulsive;
    lens.thin = thin_lens(ch, cfg);

    double m2 = 1.0;
    double dt_f = -t_L;  // n = 0: waist sits at the cavity entrance
    if (model == LensModel::exact) {
        const double c = ch.at_exit.c;
        const double s = ch.at_exit.s;
        const double q = ch.omega_sq * tau0 * s;
        const double den = c * c + q * q;
        m2 = 1.0 / den;
        dt_f = s * c * (ch.omega_sq * tau0 * tau0 - 1.0) / den;
    } else if (ch.n >= 1) {
        dt_f = 1.0 / (ch.omega_sq * t_L);
        m2 = lens.thin.magnification * lens.thin.magnification;
    }

    lens.t_f = t_L + dt_f;
    lens.z_f = cfg.velocity * dt_f;
    lens.magnification = std::sqrt(m2);
    lens.waist = lens.magnification * cfg.beam_width;
    lens.rayleigh_time = m2 * tau0;
    lens.virtual_focus = dt_f < 0;
    return lens;
}

double focal_time(const FockChannel& ch, const AtomFieldConfig& cfg) {
    return make_lens(ch, cfg).t_f;
}

double focus_position(const FockChannel& ch, const AtomFieldConfig& cfg) {
    return make_lens(ch, cfg).z_f;
}

double magnification(const FockChannel& ch, const AtomFieldConfig& cfg) {
    return make_lens(ch, cfg).magnification;
}

std::vector<LensResult> lens_table(const AtomFieldConfig& cfg, const ModeExpansion& exp,
                                   int n_max, LensModel model) {
    if (n_max < 0)
        throw NegativeParameter("n_max");
    std::vector<LensResult> table;
    table.reserve(n_max + 1);
    for (int n = 0; n <= n_max; ++n)
        table.push_back(make_lens(make_channel(cfg, exp, n), cfg, model));
    return table;
}

double lens_width(const LensResult& lens, double t) {
    const double T = (t - lens.t_f) / lens.rayleigh_time;
    return lens.waist * std::sqrt(1.0 + T * T);
}

}  // namespace qlens
