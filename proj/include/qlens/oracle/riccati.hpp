#pragma once

#include <span>
#include <vector>

namespace qlens::oracle {

// State of the Gaussian-parameter equations of motion
//   xbar' = pbar/m,           pbar' = -m Omega^2 xbar,
//   u'    = 2 hbar u v / m,   v'    = m Omega^2/hbar - (hbar/m)(u^2 - v^2),
//   mu'   = -hbar u / (2 m).
// (u, v) are the real/imaginary parts of the Riccati variable K.
struct OdeState {
    double xbar = 0;
    double pbar = 0;
    double u = 0;
    double v = 0;
    double mu = 0;
    double t = 0;
};

// Adaptive RK4 (step doubling, local extrapolation) under a constant omega_sq
// (signed; pass 0 for free flight).  Returns the state at each requested time;
// sample_times must be non-decreasing and start at or after init.t.
// Local error per step is controlled to rel_tol against per-component scales
// derived from the initial state.  Throws BlowUp if u falls to zero.
std::vector<OdeState> integrate_riccati(const OdeState& init, double omega_sq,
                                        double mass, double hbar,
                                        std::span<const double> sample_times,
                                        double rel_tol = 1e-12);

}  // namespace qlens::oracle
