#pragma once

#include <complex>
#include <functional>
#include <iosfwd>
#include <vector>

namespace qlens::oracle {

// Complex amplitudes on a uniform periodic grid.
struct GridState {
    std::vector<std::complex<double>> psi;
    double x_min = 0;
    double dx = 0;
    double t = 0;

    int size() const { return static_cast<int>(psi.size()); }
    double x(int i) const { return x_min + i * dx; }
    double extent() const { return size() * dx; }
};

// Normalized Gaussian centered at xbar:
//   psi ~ exp(-(x-xbar)^2 (1/width^2 + i chirp_v)/2 + i pbar x/hbar).
// n_points must be a power of two.  The discrete norm is set to 1 exactly.
GridState make_gaussian_grid(double extent, int n_points, double width,
                             double xbar, double pbar, double hbar,
                             double chirp_v = 0);

struct PropagationSettings {
    double dt = 0;                  // required
    int widen_check_interval = 64;  // steps between extent checks
    int max_points = 1 << 22;       // widen cap; beyond it -> GridTooSmall
    double norm_budget = 1e-10;     // allowed |norm - 1| at the end of a run
};

// Second-order symmetric splitting (half-kick, spectral drift, half-kick)
// under the given potential.  The grid auto-widens (x2 zero-padded
// re-embedding) whenever the beam width reaches 1/8 of the extent.
// Throws StepTooLarge when the norm drifts beyond budget, GridTooSmall when
// widening is exhausted.
void split_step_propagate(GridState& state, const std::function<double(double)>& potential,
                          double duration, double mass, double hbar,
                          const PropagationSettings& settings);

// Exact free flight (pure spectral drift, internally chunked for widen checks).
void free_propagate(GridState& state, double duration, double mass, double hbar);

struct GridMoments {
    double norm = 0;
    double xbar = 0;
    double pbar = 0;
    double sigma_xx2 = 0;
    double sigma_pp2 = 0;
    double sigma_xp = 0;  // (1/2)<xp+px> - <x><p>, computed spectrally
};

GridMoments grid_moments(const GridState& state, double hbar);

// Trapezoidal complex inner product <psi_b|psi_a> ... = integral conj(b) a dx.
// Throws GridMismatch unless both states share the same grid.
std::complex<double> overlap(const GridState& a, const GridState& b);

// Phase of psi at the grid point nearest the centroid.  For a zero-centroid
// Gaussian under a quadratic potential this is the Gouy phase (mod 2 pi);
// approximate readout, intended for diagnostics.
double on_axis_phase(const GridState& state);

// Debug dump, columns: x_m, density_per_m.
void dump_density_csv(const GridState& state, std::ostream& out);

}  // namespace qlens::oracle
