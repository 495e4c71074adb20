#include "qlens/ensemble.hpp"

#include <cmath>
#include <string>

#include "qlens/errors.hpp"
#include "qlens/numeric.hpp"

namespace qlens {

namespace {

const LensResult& lens_for(std::span<const LensResult> lenses, int n) {
    if (n < 0 || n >= static_cast<int>(lenses.size()) || lenses[n].n != n)
        throw MissingChannel(n);
    return lenses[n];
}

}  // namespace

Covariance covariance(const PhotonDistribution& dist, std::span<const LensResult> lenses,
                      const AtomFieldConfig& cfg, double t) {
    if (t < cfg.interaction_time)
        throw OutOfStage("covariance sums hold after the cavity (t >= t_L)");

    const double hbar = cfg.hbar;
    std::vector<double> xx, pp, xp;
    xx.reserve(dist.weights.size());
    pp.reserve(dist.weights.size());
    xp.reserve(dist.weights.size());
    for (const auto& [n, w] : dist.weights) {
        const LensResult& lens = lens_for(lenses, n);
        const double T = (t - lens.t_f) / lens.rayleigh_time;
        xx.push_back(w * 0.5 * lens.waist * lens.waist * (1.0 + T * T));
        pp.push_back(w * 0.5 * hbar * hbar / (lens.waist * lens.waist));
        xp.push_back(w * 0.5 * hbar * T);
    }
    return {pairwise_sum(xx), pairwise_sum(pp), pairwise_sum(xp)};
}

double quality_factor(const PhotonDistribution& dist, std::span<const LensResult> lenses,
                      const AtomFieldConfig& cfg) {
    const double tau0 = cfg.rayleigh_time;
    const std::size_t count = dist.weights.size();
    std::vector<double> terms;
    terms.reserve(count * count);
    for (const auto& [n, wn] : dist.weights) {
        const LensResult& ln = lens_for(lenses, n);
        const double m2n = ln.magnification * ln.magnification;
        for (const auto& [m, wm] : dist.weights) {
            const LensResult& lm = lens_for(lenses, m);
            const double m2m = lm.magnification * lm.magnification;
            const double bracket = m2n + (ln.t_f * ln.t_f - ln.t_f * lm.t_f) / (m2n * tau0 * tau0);
            terms.push_back(wn * wm / m2m * bracket);
        }
    }
    const double from_sum = pairwise_sum(terms);

    // The determinant route must give the same number at any time.
    const double t_L = cfg.interaction_time;
    for (const double t : {1.5 * t_L, 2.0 * t_L, 5.0 * t_L}) {
        const Covariance cov = covariance(dist, lenses, cfg, t);
        const double det = cov.sigma_xx2 * cov.sigma_pp2 - cov.sigma_xp * cov.sigma_xp;
        const double from_cov = 4.0 * det / (cfg.hbar * cfg.hbar);
        if (std::abs(from_cov - from_sum) > 1e-9 * std::max(std::abs(from_sum), 1.0))
            throw InconsistentMoments("C(M4) = " + format_double(from_sum) +
                                      " vs covariance route " + format_double(from_cov) +
                                      " at t = " + format_double(t));
    }
    return from_sum;
}

double purity(const PhotonDistribution& dist, std::span<const LensResult> lenses,
              const AtomFieldConfig& cfg) {
    (void)cfg;
    const std::size_t count = dist.weights.size();
    std::vector<double> terms;
    terms.reserve(count * count);
    for (const auto& [n, wn] : dist.weights) {
        const LensResult& ln = lens_for(lenses, n);
        for (const auto& [m, wm] : dist.weights) {
            const LensResult& lm = lens_for(lenses, m);
            const double tau_sum = ln.rayleigh_time + lm.rayleigh_time;
            const double dt_f = ln.t_f - lm.t_f;
            // |<psi_m|psi_n>|^2 of the two post-lens Gaussians.
            const double overlap2 = 2.0 * std::sqrt(ln.rayleigh_time * lm.rayleigh_time) /
                                    std::sqrt(tau_sum * tau_sum + dt_f * dt_f);
            terms.push_back(wn * wm * overlap2);
        }
    }
    return pairwise_sum(terms);
}

BeamMoments moments_at(const PhotonDistribution& dist, std::span<const LensResult> lenses,
                       const AtomFieldConfig& cfg, double t) {
    const Covariance cov = covariance(dist, lenses, cfg, t);
    BeamMoments out;
    out.t = t;
    out.sigma_xx2 = cov.sigma_xx2;
    out.sigma_pp2 = cov.sigma_pp2;
    out.sigma_xp = cov.sigma_xp;
    out.det = cov.sigma_xx2 * cov.sigma_pp2 - cov.sigma_xp * cov.sigma_xp;
    out.quality = 4.0 * out.det / (cfg.hbar * cfg.hbar);
    out.purity = purity(dist, lenses, cfg);
    return out;
}

}  // namespace qlens
