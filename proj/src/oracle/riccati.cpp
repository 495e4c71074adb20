#include "qlens/oracle/riccati.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "qlens/errors.hpp"

namespace qlens::oracle {

namespace {

using Vec = std::array<double, 5>;  // xbar, pbar, u, v, mu

Vec rhs(const Vec& y, double omega_sq, double mass, double hbar) {
    const double u = y[2];
    const double v = y[3];
    return {
        y[1] / mass,
        -mass * omega_sq * y[0],
        2.0 * hbar * u * v / mass,
        mass * omega_sq / hbar - (hbar / mass) * (u * u - v * v),
        -hbar * u / (2.0 * mass),
    };
}

Vec rk4_step(const Vec& y, double h, double omega_sq, double mass, double hbar) {
    const Vec k1 = rhs(y, omega_sq, mass, hbar);
    Vec y2;
    for (int i = 0; i < 5; ++i) y2[i] = y[i] + 0.5 * h * k1[i];
    const Vec k2 = rhs(y2, omega_sq, mass, hbar);
    for (int i = 0; i < 5; ++i) y2[i] = y[i] + 0.5 * h * k2[i];
    const Vec k3 = rhs(y2, omega_sq, mass, hbar);
    for (int i = 0; i < 5; ++i) y2[i] = y[i] + h * k3[i];
    const Vec k4 = rhs(y2, omega_sq, mass, hbar);
    Vec out;
    for (int i = 0; i < 5; ++i)
        out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

}  // namespace

std::vector<OdeState> integrate_riccati(const OdeState& init, double omega_sq,
                                        double mass, double hbar,
                                        std::span<const double> sample_times,
                                        double rel_tol) {
    if (!(init.u > 0))
        throw BlowUp("initial u must be positive");

    const double width0 = 1.0 / std::sqrt(init.u);
    const Vec scale = {
        std::max(std::abs(init.xbar), width0),
        std::max(std::abs(init.pbar),
                 hbar * std::sqrt(init.u) + mass * std::sqrt(std::abs(omega_sq)) * std::abs(init.xbar)),
        init.u,
        init.u,
        1.0,
    };

    // Fastest rate in the system sets the first trial step.
    const double rate = std::max({std::sqrt(std::abs(omega_sq)),
                                  hbar * init.u / mass,
                                  hbar * std::abs(init.v) / mass});
    double h = 0.1 / std::max(rate, 1e-300);

    Vec y = {init.xbar, init.pbar, init.u, init.v, init.mu};
    double t = init.t;
    std::vector<OdeState> out;
    out.reserve(sample_times.size());

    for (const double target : sample_times) {
        if (target < t - 1e-15 * std::max(std::abs(t), std::abs(target)))
            throw BlowUp("sample times must be non-decreasing");
        while (t < target) {
            const double step = std::min(h, target - t);
            const Vec full = rk4_step(y, step, omega_sq, mass, hbar);
            Vec half = rk4_step(y, 0.5 * step, omega_sq, mass, hbar);
            half = rk4_step(half, 0.5 * step, omega_sq, mass, hbar);

            double err = 0;
            for (int i = 0; i < 5; ++i)
                err = std::max(err, std::abs(half[i] - full[i]) / (15.0 * scale[i]));

            if (err <= rel_tol) {
                for (int i = 0; i < 5; ++i)
                    y[i] = half[i] + (half[i] - full[i]) / 15.0;
                t += step;
                if (!(y[2] > 0))
                    throw BlowUp("u reached zero during integration");
                if (step == h)
                    h *= std::min(5.0, 0.9 * std::pow(rel_tol / std::max(err, 1e-300), 0.2));
            } else {
                h = step * std::max(0.2, 0.9 * std::pow(rel_tol / err, 0.2));
                if (!(h > 1e-18 * std::max(std::abs(target), 1e-300)))
                    throw BlowUp("step size underflow");
            }
        }
        out.push_back({y[0], y[1], y[2], y[3], y[4], t});
    }
    return out;
}

}  // namespace qlens::oracle
