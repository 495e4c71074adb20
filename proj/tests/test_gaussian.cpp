#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "qlens/errors.hpp"
#include "qlens/gaussian.hpp"
#include "qlens/lens.hpp"
#include "support.hpp"

using namespace qlens;
using qlens_test::cs_config;
using qlens_test::rel_err;
using qlens_test::synth_config;

namespace {

struct Setup {
    AtomFieldConfig cfg;
    ModeExpansion exp;
    FockChannel ch;
};

Setup make(const AtomFieldConfig& cfg, int n) {
    const ModeExpansion exp = mode_expand(cfg);
    return {cfg, exp, make_channel(cfg, exp, n)};
}

}  // namespace

TEST_CASE("initial condition: centered on the axis, width b0, flat front") {
    auto s = make(synth_config(0.8, 0.4, 1, 1.5e-7, 2.2e-25, 300.0, +1, 1.5e-7 * 6 / 16), 1);
    const GaussianParams p = evolve_in_cavity(s.ch, s.exp, s.cfg, 0.0);
    CHECK(p.xbar == -s.exp.x_f);
    CHECK(s.exp.x_f != 0.0);
    CHECK(p.pbar == 0.0);
    CHECK(p.u == 1.0 / (s.cfg.beam_width * s.cfg.beam_width));
    CHECK(p.v == 0.0);
    CHECK(p.mu == 0.0);
}

TEST_CASE("quarter period transfers the squeeze: width b_n^2/b0") {
    auto s = make(synth_config(2.0, 0.5, 1), 1);
    const double t_quarter = 0.5 * kPi / s.ch.omega;
    REQUIRE(t_quarter <= s.cfg.interaction_time);
    const GaussianParams p = evolve_in_cavity(s.ch, s.exp, s.cfg, t_quarter);
    const double b0 = s.cfg.beam_width;
    CHECK(rel_err(p.u, b0 * b0 / std::pow(s.ch.b_n, 4)) <= 1e-10);
    CHECK(rel_err(1.0 / std::sqrt(p.u), s.ch.b_n * s.ch.b_n / b0) <= 1e-10);
}

TEST_CASE("stationary channel: b0 = b_n keeps u constant and v = 0") {
    auto s = make(synth_config(1.3, 1.0, 1), 1);
    for (const double f : {0.2, 0.5, 0.9}) {
        const GaussianParams p = evolve_in_cavity(s.ch, s.exp, s.cfg, f * s.cfg.interaction_time);
        CHECK(rel_err(p.u, 1.0 / (s.cfg.beam_width * s.cfg.beam_width)) <= 1e-12);
        CHECK(std::abs(p.v) <= 1e-12 * p.u);
    }
}

TEST_CASE("all five parameters are continuous at t_L") {
    for (const int sign : {+1, -1}) {
        auto s = make(synth_config(0.9, 0.35, 2, 1.5e-7, 2.2e-25, 300.0, sign, 1.5e-7 * 6 / 16), 2);
        const double t_L = s.cfg.interaction_time;
        const GaussianParams in = evolve_in_cavity(s.ch, s.exp, s.cfg, t_L);
        const GaussianParams out = evolve_free(s.ch, s.exp, s.cfg, t_L);
        CHECK(rel_err(in.u, out.u) <= 1e-12);
        CHECK(rel_err(in.v, out.v) <= 1e-12);
        CHECK(rel_err(in.xbar, out.xbar) <= 1e-12);
        CHECK(rel_err(in.pbar, out.pbar) <= 1e-12);
        CHECK(std::abs(in.mu - out.mu) <= 1e-15);
    }
}

TEST_CASE("n = 0 channel spreads freely from t = 0 through both stages") {
    auto s = make(cs_config(), 0);
    const double b0 = s.cfg.beam_width;
    const double tau0 = s.cfg.rayleigh_time;
    for (const double t : {0.3 * s.cfg.interaction_time, 2.0 * s.cfg.interaction_time,
                           5.0 * s.cfg.interaction_time}) {
        const GaussianParams p = evolve(s.ch, s.exp, s.cfg, t);
        CHECK(rel_err(b0 * b0 * p.u, 1.0 / (1.0 + (t / tau0) * (t / tau0))) <= 1e-12);
    }
}

TEST_CASE("generic focus example: phi = pi/4, b_n^4/b0^4 = 1/2 -> waist at tau_n/3") {
    // r = b_n^2/b0^2 = 1/sqrt(2) makes the squeeze ratio b_n^4/b0^4 = 1/2.
    auto s = make(synth_config(kPi / 4, 1.0 / std::sqrt(2.0), 3), 3);
    const double dt_f = make_lens(s.ch, s.cfg).t_f - s.cfg.interaction_time;
    CHECK(rel_err(dt_f, s.ch.tau_n / 3.0) <= 1e-10);
    // u is maximal (width minimal) there.
    const double t_f = s.cfg.interaction_time + dt_f;
    const double u_f = evolve_free(s.ch, s.exp, s.cfg, t_f).u;
    CHECK(u_f >= evolve_free(s.ch, s.exp, s.cfg, t_f * (1 + 1e-3)).u);
    CHECK(u_f >= evolve_free(s.ch, s.exp, s.cfg, t_f * (1 - 1e-3)).u);
}

TEST_CASE("beam_width equals 1/sqrt(u) on a random post-lens grid") {
    auto s = make(cs_config(), 8);
    const LensResult lens = make_lens(s.ch, s.cfg);
    std::mt19937_64 rng(987123);
    std::uniform_real_distribution<double> pick(s.cfg.interaction_time,
                                                s.cfg.interaction_time + 5.0 * lens.rayleigh_time);
    double worst = 0;
    for (int i = 0; i < 1000; ++i) {
        const double t = pick(rng);
        worst = std::max(worst, rel_err(beam_width(s.ch, s.cfg, t),
                                        1.0 / std::sqrt(evolve_free(s.ch, s.exp, s.cfg, t).u)));
    }
    CHECK(worst <= 1e-10);
}

TEST_CASE("stage guards") {
    auto s = make(cs_config(), 3);
    CHECK_THROWS_AS(evolve_in_cavity(s.ch, s.exp, s.cfg, -1e-9), OutOfStage);
    CHECK_THROWS_AS(evolve_in_cavity(s.ch, s.exp, s.cfg, 1.01 * s.cfg.interaction_time), OutOfStage);
    CHECK_THROWS_AS(evolve_free(s.ch, s.exp, s.cfg, 0.99 * s.cfg.interaction_time), OutOfStage);
    CHECK_THROWS_AS(beam_width(s.ch, s.cfg, 0.5 * s.cfg.interaction_time), OutOfStage);
    CHECK_THROWS_AS(gouy_phase(s.ch, s.cfg, -1e-12), OutOfStage);
}

TEST_CASE("Gouy phase: zero start, monotone, continuous across tan poles") {
    // phi_n = 2.5 crosses the tan singularity at Omega t = pi/2.
    auto s = make(synth_config(2.5, 0.4, 1), 1);
    const double t_L = s.cfg.interaction_time;
    double prev = 0.0;
    double prev_t = 0.0;
    CHECK(gouy_phase(s.ch, s.cfg, 0.0) == 0.0);
    for (int i = 1; i <= 4000; ++i) {
        const double t = t_L * i / 2000.0;  // through t_L into free flight
        const double mu = gouy_phase(s.ch, s.cfg, t);
        CHECK(mu < prev);  // strictly decreasing (u > 0)
        // No branch jumps: the largest physically possible slope is
        // |mu'| = hbar u_max / (2m) with u_max = b0^2/b_n^4.
        const double max_slope = s.cfg.hbar / (2.0 * s.cfg.mass) *
                                 std::pow(s.cfg.beam_width / (s.ch.b_n * s.ch.b_n), 2);
        CHECK(prev - mu <= 1.05 * max_slope * (t - prev_t) + 1e-15);
        prev = mu;
        prev_t = t;
    }
}

TEST_CASE("Gouy phase matches quadrature of -hbar u/(2m) in both stages") {
    auto s = make(cs_config(), 5);
    const double t_L = s.cfg.interaction_time;
    const LensResult lens = make_lens(s.ch, s.cfg);

    const auto simpson = [&](auto&& integrand, double a, double b, int intervals) {
        double acc = integrand(a) + integrand(b);
        for (int i = 1; i < intervals; ++i)
            acc += (i % 2 == 1 ? 4.0 : 2.0) * integrand(a + (b - a) * i / intervals);
        return acc * (b - a) / (3.0 * intervals);
    };

    const auto mu_dot_in = [&](double t) {
        return -s.cfg.hbar * evolve_in_cavity(s.ch, s.exp, s.cfg, t).u / (2.0 * s.cfg.mass);
    };
    CHECK(std::abs(gouy_phase(s.ch, s.cfg, t_L) - simpson(mu_dot_in, 0.0, t_L, 2000)) <= 1e-9);

    const auto mu_dot_free = [&](double t) {
        return -s.cfg.hbar * evolve_free(s.ch, s.exp, s.cfg, t).u / (2.0 * s.cfg.mass);
    };
    const double t_end = t_L + 2.0 * lens.rayleigh_time;
    const double expected = gouy_phase(s.ch, s.cfg, t_L) + simpson(mu_dot_free, t_L, t_end, 4000);
    CHECK(std::abs(gouy_phase(s.ch, s.cfg, t_end) - expected) <= 1e-9);
}

TEST_CASE("free channel Gouy asymptote: -pi/4 after one waist passage") {
    auto s = make(cs_config(), 0);
    const double tau0 = s.cfg.rayleigh_time;
    CHECK(rel_err(gouy_phase(s.ch, s.cfg, tau0), -0.5 * std::atan(1.0)) <= 1e-12);
    CHECK(gouy_phase(s.ch, s.cfg, 1e5 * tau0) == doctest::Approx(-kPi / 4).epsilon(1e-4));
}

TEST_CASE("vanishing-frequency limit reduces to free spreading") {
    // Omega tau0 = 1/r = 1e-6, evaluated out to t_L = tau0.
    auto s = make(synth_config(1e-6, 1e6, 1), 1);
    const double tau0 = s.cfg.rayleigh_time;
    const double b0 = s.cfg.beam_width;
    for (const double f : {0.25, 0.5, 1.0}) {
        const double t = f * s.cfg.interaction_time;
        const GaussianParams p = evolve_in_cavity(s.ch, s.exp, s.cfg, t);
        const double zeta = t / tau0;
        CHECK(rel_err(p.u, 1.0 / (b0 * b0 * (1.0 + zeta * zeta))) <= 1e-6);
        CHECK(rel_err(p.v, -zeta / (b0 * b0 * (1.0 + zeta * zeta))) <= 1e-6);
        CHECK(std::abs(p.mu - (-0.5 * std::atan(zeta))) <= 1e-6);
    }
}

TEST_CASE("expulsive channel: width grows, u stays positive, flagged") {
    auto s = make(synth_config(0.8, 0.5, 1, 1.5e-7, 2.2e-25, 300.0, -1), 1);
    CHECK(s.ch.expulsive);
    double prev_u = 1.0 / (s.cfg.beam_width * s.cfg.beam_width);
    for (const double f : {0.25, 0.5, 0.75, 1.0}) {
        const GaussianParams p = evolve_in_cavity(s.ch, s.exp, s.cfg, f * s.cfg.interaction_time);
        CHECK(p.u > 0);
        CHECK(p.u < prev_u);
        prev_u = p.u;
    }
    const LensResult lens = make_lens(s.ch, s.cfg);
    CHECK(lens.virtual_focus);
    CHECK(lens.magnification > 1.0);
}

TEST_CASE("property: u > 0 across stages for random configurations") {
    std::mt19937_64 rng(20240812);
    std::uniform_real_distribution<double> pick_phi(0.05, 3.0);
    std::uniform_real_distribution<double> pick_r(0.1, 3.0);
    std::uniform_real_distribution<double> pick_f(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int sign = trial % 4 == 0 ? -1 : +1;
        const auto cfg = synth_config(pick_phi(rng), pick_r(rng), 1 + trial % 5,
                                      1.5e-7, 2.2e-25, 300.0, sign);
        const ModeExpansion exp = mode_expand(cfg);
        for (int n = 0; n <= 20; n += 4) {
            const FockChannel ch = make_channel(cfg, exp, n);
            for (int i = 0; i < 8; ++i) {
                const double t_in = pick_f(rng) * cfg.interaction_time;
                CHECK(evolve_in_cavity(ch, exp, cfg, t_in).u > 0);
                const double t_out = cfg.interaction_time * (1.0 + 3.0 * pick_f(rng));
                CHECK(evolve_free(ch, exp, cfg, t_out).u > 0);
            }
        }
    }
}

TEST_CASE("closed-form K satisfies the Riccati equation (numerical derivative)") {
    auto s = make(cs_config(), 7);
    const auto K_at = [&](double t) {
        const GaussianParams p = evolve(s.ch, s.exp, s.cfg, t);
        return std::complex<double>(p.u, p.v);
    };
    const double h = 1e-3 / s.ch.omega;
    for (const double f : {0.21, 0.47, 0.83}) {
        const double t = f * s.cfg.interaction_time;
        const auto dK = (-K_at(t + 2 * h) + 8.0 * K_at(t + h) - 8.0 * K_at(t - h) + K_at(t - 2 * h)) /
                        (12.0 * h);
        const std::complex<double> K = K_at(t);
        const std::complex<double> rhs =
            std::complex<double>(0, 1) *
            (s.cfg.mass * s.ch.omega_sq / s.cfg.hbar - (s.cfg.hbar / s.cfg.mass) * K * K);
        CHECK(std::abs(dK - rhs) / std::abs(rhs) <= 1e-8);
    }
}
