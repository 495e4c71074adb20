#pragma once

#include <vector>

#include "qlens/channel.hpp"

namespace qlens {

// Thin-lens approximations with their validity flags.
struct ThinLens {
    double t_f = 0;            // t_L + 1/(Omega_n^2 t_L)
    double magnification = 0;  // [1 + (b0/b_n)^4 phi_n^2]^(-1/2)
    bool ok_phi = false;       // phi_n < 0.1
    bool ok_squeeze = false;   // (b_n/b0)^4 < phi_n^2
};

// Focal quantities of one Fock channel.
struct LensResult {
    int n = 0;
    double t_f = 0;            // time of minimal width [s]
    double z_f = 0;            // v_z (t_f - t_L) [m]
    double magnification = 1;  // M_n; < 1 convergent, 1 no focusing, > 1 divergent
    double waist = 0;          // b0' = M_n b0 [m]
    double rayleigh_time = 0;  // tau0' = M_n^2 tau0 [s]
    bool virtual_focus = false;  // t_f < t_L (waist before cavity exit)
    bool expulsive = false;
    ThinLens thin;
};

enum class LensModel {
    exact,  // closed forms from the two-stage Gaussian evolution
    thin    // thin-lens approximations (used for the coherent-sweep reproduction)
};

LensResult make_lens(const FockChannel& ch, const AtomFieldConfig& cfg,
                     LensModel model = LensModel::exact);

double focal_time(const FockChannel& ch, const AtomFieldConfig& cfg);
double focus_position(const FockChannel& ch, const AtomFieldConfig& cfg);
double magnification(const FockChannel& ch, const AtomFieldConfig& cfg);
ThinLens thin_lens(const FockChannel& ch, const AtomFieldConfig& cfg);

// Lens results for n = 0..n_max (index == n).  The n = 0 entry is the free
// channel: M = 1, t_f = 0, tau0' = tau0, exact limit of the closed forms.
std::vector<LensResult> lens_table(const AtomFieldConfig& cfg, const ModeExpansion& exp,
                                   int n_max, LensModel model = LensModel::exact);

// Beam width after the lens: B_n(t) = b0' [1 + ((t - t_f)/tau0')^2]^(1/2).
double lens_width(const LensResult& lens, double t);

}  // namespace qlens
