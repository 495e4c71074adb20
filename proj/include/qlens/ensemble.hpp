#pragma once

#include <span>

#include "qlens/distribution.hpp"
#include "qlens/lens.hpp"

namespace qlens {

struct Covariance {
    double sigma_xx2 = 0;  // [m^2]
    double sigma_pp2 = 0;  // [kg^2 m^2 / s^2]
    double sigma_xp = 0;   // [J s]
};

// Distribution-averaged second moments and coherence figures at time t.
struct BeamMoments {
    double t = 0;
    double sigma_xx2 = 0;
    double sigma_pp2 = 0;
    double sigma_xp = 0;
    double det = 0;      // sigma_xx2 sigma_pp2 - sigma_xp^2 >= hbar^2/4
    double quality = 0;  // C = 4 det / hbar^2 >= 1
    double purity = 0;   // Tr(rho_A^2) in (0, 1]
};

// Post-lens covariance sums over the truncated, renormalized distribution
// (t >= t_L).  `lenses` must contain an entry for every n in the support
// (lens_table layout, index == n); throws MissingChannel otherwise.
Covariance covariance(const PhotonDistribution& dist, std::span<const LensResult> lenses,
                      const AtomFieldConfig& cfg, double t);

// Time-independent quality factor from the double sum
//   C = sum_nm |w_n|^2 |w_m|^2 / M_m^2 [M_n^2 + ((t_f^n)^2 - t_f^n t_f^m)/(M_n^2 tau0^2)].
// Cross-checked against 4 det/hbar^2 from the covariance route at three times;
// throws InconsistentMoments on disagreement beyond 1e-9 relative.
double quality_factor(const PhotonDistribution& dist, std::span<const LensResult> lenses,
                      const AtomFieldConfig& cfg);

// Atomic purity Tr(rho_A^2); 1 exactly for a single Fock channel.  The double
// sum carries the weight factors |w_n|^2 |w_m|^2 (each term is the Gaussian
// overlap |<psi_m|psi_n>|^2 of the post-lens channel states).
double purity(const PhotonDistribution& dist, std::span<const LensResult> lenses,
              const AtomFieldConfig& cfg);

BeamMoments moments_at(const PhotonDistribution& dist, std::span<const LensResult> lenses,
                       const AtomFieldConfig& cfg, double t);

}  // namespace qlens
