#pragma once

#include <utility>
#include <vector>

#include "qlens/config.hpp"

namespace qlens {

// Photon-number statistics |w_n|^2 on a truncated, renormalized support.
struct PhotonDistribution {
    DistributionKind kind = DistributionKind::fock;
    double parameter = 0;                         // n for fock, nbar otherwise
    std::vector<std::pair<int, double>> weights;  // (n, |w_n|^2), ascending n
    double tail_mass = 0;                         // mass dropped before renormalization

    int max_n() const { return weights.empty() ? -1 : weights.back().first; }
};

// fock: single unit weight at n = parameter (must be a non-negative integer).
// coherent: |w_n|^2 = e^-nbar nbar^n / n!, truncated at the smallest N with
//   tail mass <= tail_budget, then renormalized.
// thermal: |w_n|^2 = nbar^n / (nbar+1)^(n+1), truncated identically.
// Weights are built by the ratio recurrence, never via factorials.
PhotonDistribution make_distribution(DistributionKind kind, double parameter, double tail_budget);

PhotonDistribution make_distribution(const AtomFieldConfig& cfg);

// Drops all weights above n_max and renormalizes.
PhotonDistribution truncate(const PhotonDistribution& dist, int n_max);

double mean_photon_number(const PhotonDistribution& dist);
double total_weight(const PhotonDistribution& dist);

}  // namespace qlens
