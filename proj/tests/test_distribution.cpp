#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qlens/distribution.hpp"
#include "qlens/errors.hpp"
#include "support.hpp"

using namespace qlens;

namespace {

void check_normalized(const PhotonDistribution& dist) {
    CHECK(std::abs(total_weight(dist) - 1.0) <= 1e-14);
    for (const auto& [n, w] : dist.weights) {
        CHECK(w >= 0.0);
        CHECK(n >= 0);
    }
}

}  // namespace

TEST_CASE("coherent vacuum and analytic low-order weights") {
    const auto vac = make_distribution(DistributionKind::coherent, 0.0, 1e-12);
    REQUIRE(vac.weights.size() == 1);
    CHECK(vac.weights[0] == std::pair<int, double>{0, 1.0});

    const auto one = make_distribution(DistributionKind::coherent, 1.0, 1e-12);
    CHECK(one.weights[0].second == doctest::Approx(3.67879441171442334e-01).epsilon(1e-13));
    check_normalized(one);
}

TEST_CASE("coherent nbar = 10 truncation and mean") {
    const auto dist = make_distribution(DistributionKind::coherent, 10.0, 1e-12);
    CHECK(dist.max_n() == 39);  // smallest support with tail mass <= 1e-12
    CHECK(dist.tail_mass <= 1e-12);
    check_normalized(dist);
    CHECK(std::abs(mean_photon_number(dist) - 10.0) <= std::max(1e-10, 1e-12 * dist.max_n()));
}

TEST_CASE("fock distributions have exactly one unit weight") {
    const auto dist = make_distribution(DistributionKind::fock, 7.0, 1e-12);
    REQUIRE(dist.weights.size() == 1);
    CHECK(dist.weights[0].first == 7);
    CHECK(dist.weights[0].second == 1.0);
    CHECK(dist.tail_mass == 0.0);

    CHECK_THROWS_AS(make_distribution(DistributionKind::fock, 2.5, 1e-12), ConfigError);
    CHECK_THROWS_AS(make_distribution(DistributionKind::fock, -1.0, 1e-12), NegativeParameter);
}

TEST_CASE("thermal weights follow the geometric recurrence") {
    const double nbar = 3.0;
    const auto dist = make_distribution(DistributionKind::thermal, nbar, 1e-9);
    check_normalized(dist);
    const double ratio = nbar / (nbar + 1.0);
    for (std::size_t i = 1; i < std::min<std::size_t>(dist.weights.size(), 20); ++i)
        CHECK(dist.weights[i].second / dist.weights[i - 1].second ==
              doctest::Approx(ratio).epsilon(1e-12));
    CHECK(std::abs(mean_photon_number(dist) - nbar) <= 1e-8);  // geometric tail is heavy
}

TEST_CASE("property: random distributions stay normalized with correct means") {
    std::mt19937_64 rng(20240811);
    std::uniform_real_distribution<double> pick_param(0.0, 40.0);
    for (int trial = 0; trial < 200; ++trial) {
        const auto kind = trial % 2 == 0 ? DistributionKind::coherent : DistributionKind::thermal;
        const double nbar = pick_param(rng);
        const double tail = trial % 3 == 0 ? 1e-9 : 1e-12;
        const auto dist = make_distribution(kind, nbar, tail);
        check_normalized(dist);
        const double mean_tol = std::max(1e-10, tail * dist.max_n() * 10.0);
        CHECK(std::abs(mean_photon_number(dist) - nbar) <= std::max(mean_tol, nbar * 1e-7));
    }
}

TEST_CASE("truncation renormalizes and tracks dropped mass") {
    const auto dist = make_distribution(DistributionKind::coherent, 5.0, 1e-12);
    const auto cut = truncate(dist, 12);
    CHECK(cut.max_n() == 12);
    check_normalized(cut);
    CHECK(cut.tail_mass > dist.tail_mass);
    CHECK_THROWS_AS(truncate(dist, -1), ConfigError);
}

TEST_CASE("invalid inputs") {
    CHECK_THROWS_AS(make_distribution(DistributionKind::coherent, -0.5, 1e-12), NegativeParameter);
    CHECK_THROWS_AS(make_distribution(DistributionKind::coherent, 5.0, 0.0), ConfigError);
    CHECK_THROWS_AS(make_distribution(DistributionKind::coherent, 5.0, 1e-3), ConfigError);
}
