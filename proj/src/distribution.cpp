#include "qlens/distribution.hpp"

#include <cmath>
#include <limits>

#include "qlens/errors.hpp"
#include "qlens/numeric.hpp"

namespace qlens {

namespace {

void renormalize(PhotonDistribution& dist) {
    std::vector<double> raw;
    raw.reserve(dist.weights.size());
    for (const auto& [n, w] : dist.weights)
        raw.push_back(w);
    const double total = pairwise_sum(raw);
    if (!(total > 0))
        throw NumericError("photon distribution has zero total weight");
    for (auto& [n, w] : dist.weights)
        w /= total;
}

// Appends weights following w_{n+1} = ratio(n) * w_n until the analytic tail
// drops below the budget, then renormalizes.
template <typename RatioFn>
PhotonDistribution build_by_recurrence(DistributionKind kind, double parameter,
                                       double tail_budget, double w0, RatioFn ratio) {
    PhotonDistribution dist;
    dist.kind = kind;
    dist.parameter = parameter;

    double w = w0;
    double cumulative = w;
    int n = 0;
    dist.weights.emplace_back(0, w);
    // Exact masses sum to 1, so 1 - cumulative bounds the dropped tail.
    const int hard_cap = 100000;
    while (1.0 - cumulative > tail_budget && n < hard_cap) {
        w *= ratio(n);
        ++n;
        dist.weights.emplace_back(n, w);
        cumulative += w;
    }
    if (n >= hard_cap)
        throw NumericError("photon distribution truncation did not converge");
    dist.tail_mass = std::max(0.0, 1.0 - cumulative);
    renormalize(dist);
    return dist;
}

}  // namespace

PhotonDistribution make_distribution(DistributionKind kind, double parameter, double tail_budget) {
    if (parameter < 0)
        throw NegativeParameter("distribution parameter");
    if (!(tail_budget > 0) || tail_budget > 1e-6)
        throw ConfigError("tail_budget must lie in (0, 1e-6]");

    switch (kind) {
        case DistributionKind::fock: {
            const double rounded = std::nearbyint(parameter);
            if (std::abs(parameter - rounded) > 1e-9)
                throw ConfigError("fock distribution parameter must be a non-negative integer");
            PhotonDistribution dist;
            dist.kind = kind;
            dist.parameter = rounded;
            dist.weights.emplace_back(static_cast<int>(rounded), 1.0);
            dist.tail_mass = 0.0;
            return dist;
        }
        case DistributionKind::coherent: {
            const double nbar = parameter;
            if (nbar == 0) {
                PhotonDistribution dist;
                dist.kind = kind;
                dist.parameter = 0.0;
                dist.weights.emplace_back(0, 1.0);
                return dist;
            }
            return build_by_recurrence(kind, nbar, tail_budget, std::exp(-nbar),
                                       [nbar](int n) { return nbar / (n + 1); });
        }
        case DistributionKind::thermal: {
            const double nbar = parameter;
            if (nbar == 0) {
                PhotonDistribution dist;
                dist.kind = kind;
                dist.parameter = 0.0;
                dist.weights.emplace_back(0, 1.0);
                return dist;
            }
            const double ratio = nbar / (nbar + 1.0);
            return build_by_recurrence(kind, nbar, tail_budget, 1.0 / (nbar + 1.0),
                                       [ratio](int) { return ratio; });
        }
    }
    throw ConfigError("unknown distribution kind");
}

PhotonDistribution make_distribution(const AtomFieldConfig& cfg) {
    return make_distribution(cfg.distribution_kind, cfg.distribution_parameter, cfg.tail_budget);
}

PhotonDistribution truncate(const PhotonDistribution& dist, int n_max) {
    PhotonDistribution out;
    out.kind = dist.kind;
    out.parameter = dist.parameter;
    double dropped = 0;
    for (const auto& [n, w] : dist.weights) {
        if (n <= n_max)
            out.weights.emplace_back(n, w);
        else
            dropped += w;
    }
    if (out.weights.empty())
        throw ConfigError("truncation removed the whole distribution");
    out.tail_mass = dist.tail_mass + dropped;
    renormalize(out);
    return out;
}

double mean_photon_number(const PhotonDistribution& dist) {
    std::vector<double> terms;
    terms.reserve(dist.weights.size());
    for (const auto& [n, w] : dist.weights)
        terms.push_back(n * w);
    return pairwise_sum(terms);
}

double total_weight(const PhotonDistribution& dist) {
    std::vector<double> terms;
    terms.reserve(dist.weights.size());
    for (const auto& [n, w] : dist.weights)
        terms.push_back(w);
    return pairwise_sum(terms);
}

}  // namespace qlens
