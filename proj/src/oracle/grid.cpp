#include "qlens/oracle/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <ostream>

#include "qlens/constants.hpp"
#include "qlens/errors.hpp"
#include "qlens/numeric.hpp"

namespace qlens::oracle {

namespace {

// FFTW planning is not thread-safe; execution on the plan's own buffer is.
std::mutex g_plan_mutex;

class Fft {
  public:
    explicit Fft(std::vector<std::complex<double>>& data) : n_(static_cast<int>(data.size())) {
        auto* raw = reinterpret_cast<fftw_complex*>(data.data());
        std::lock_guard lock(g_plan_mutex);
        // FFTW_ESTIMATE keeps the plan choice deterministic across runs.
        fwd_ = fftw_plan_dft_1d(n_, raw, raw, FFTW_FORWARD, FFTW_ESTIMATE);
        bwd_ = fftw_plan_dft_1d(n_, raw, raw, FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    ~Fft() {
        std::lock_guard lock(g_plan_mutex);
        fftw_destroy_plan(fwd_);
        fftw_destroy_plan(bwd_);
    }
    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    void forward() { fftw_execute(fwd_); }
    void backward_normalized(std::vector<std::complex<double>>& data) {
        fftw_execute(bwd_);
        const double inv = 1.0 / n_;
        for (auto& c : data)
            c *= inv;
    }

  private:
    int n_;
    fftw_plan fwd_;
    fftw_plan bwd_;
};

bool is_power_of_two(int n) {
    return n > 0 && (n & (n - 1)) == 0;
}

// Wavenumber of FFT bin j on an n-point grid of spacing dx.
double bin_k(int j, int n, double dx) {
    const int shifted = (j < n / 2) ? j : j - n;
    return 2.0 * kPi * shifted / (n * dx);
}

double discrete_norm(const GridState& state) {
    double acc = 0;
    for (const auto& c : state.psi)
        acc += std::norm(c);
    return acc * state.dx;
}

// Cheap width estimate used by the auto-widen logic.
double density_width(const GridState& state) {
    double norm = 0, mean = 0;
    for (int i = 0; i < state.size(); ++i) {
        const double d = std::norm(state.psi[i]);
        norm += d;
        mean += d * state.x(i);
    }
    mean /= norm;
    double var = 0;
    for (int i = 0; i < state.size(); ++i) {
        const double dx = state.x(i) - mean;
        var += std::norm(state.psi[i]) * dx * dx;
    }
    return std::sqrt(2.0 * var / norm);
}

void widen_if_needed(GridState& state, int max_points) {
    while (8.0 * density_width(state) >= state.extent()) {
        const int n = state.size();
        if (2 * n > max_points)
            throw GridTooSmall("beam reached 1/8 of the extent and the widen cap (" +
                               std::to_string(max_points) + " points) is exhausted");
        // Re-embed centered, zero padding on both sides; dx unchanged.
        std::vector<std::complex<double>> wide(2 * n, {0.0, 0.0});
        for (int i = 0; i < n; ++i)
            wide[i + n / 2] = state.psi[i];
        state.psi = std::move(wide);
        state.x_min -= n / 2 * state.dx;
    }
}

}  // namespace

GridState make_gaussian_grid(double extent, int n_points, double width,
                             double xbar, double pbar, double hbar, double chirp_v) {
    if (!is_power_of_two(n_points))
        throw ConfigError("grid size must be a power of two");
    if (!(extent > 0) || !(width > 0))
        throw ConfigError("grid extent and width must be positive");

    GridState state;
    state.dx = extent / n_points;
    state.x_min = -extent / 2.0;
    state.psi.resize(n_points);
    const double u = 1.0 / (width * width);
    for (int i = 0; i < n_points; ++i) {
        const double d = state.x(i) - xbar;
        const std::complex<double> arg(-0.5 * d * d * u,
                                       -0.5 * d * d * chirp_v + pbar * state.x(i) / hbar);
        state.psi[i] = std::exp(arg);
    }
    const double norm = discrete_norm(state);
    const double rescale = 1.0 / std::sqrt(norm);
    for (auto& c : state.psi)
        c *= rescale;
    return state;
}

void split_step_propagate(GridState& state, const std::function<double(double)>& potential,
                          double duration, double mass, double hbar,
                          const PropagationSettings& settings) {
    if (!(settings.dt > 0))
        throw StepTooLarge("dt must be positive");
    if (duration < 0)
        throw StepTooLarge("duration must be non-negative");
    if (duration == 0)
        return;

    const int steps = std::max(1, static_cast<int>(std::ceil(duration / settings.dt - 1e-9)));
    const double dt = duration / steps;
    const double norm_before = discrete_norm(state);

    widen_if_needed(state, settings.max_points);

    int done = 0;
    while (done < steps) {
        const int n = state.size();
        // Phase tables are fixed while the grid size is; rebuild after widening.
        std::vector<std::complex<double>> half_kick(n), drift(n);
        for (int i = 0; i < n; ++i)
            half_kick[i] = std::polar(1.0, -potential(state.x(i)) * dt / (2.0 * hbar));
        for (int j = 0; j < n; ++j) {
            const double k = bin_k(j, n, state.dx);
            drift[j] = std::polar(1.0, -hbar * k * k * dt / (2.0 * mass));
        }
        Fft fft(state.psi);

        const int chunk_end = std::min(steps, done + settings.widen_check_interval);
        for (; done < chunk_end; ++done) {
            for (int i = 0; i < n; ++i)
                state.psi[i] *= half_kick[i];
            fft.forward();
            for (int j = 0; j < n; ++j)
                state.psi[j] *= drift[j];
            fft.backward_normalized(state.psi);
            for (int i = 0; i < n; ++i)
                state.psi[i] *= half_kick[i];
            state.t += dt;
        }
        widen_if_needed(state, settings.max_points);
    }

    const double norm_after = discrete_norm(state);
    if (std::abs(norm_after - norm_before) > settings.norm_budget)
        throw StepTooLarge("norm drifted by " + format_double(norm_after - norm_before));
}

void free_propagate(GridState& state, double duration, double mass, double hbar) {
    if (duration == 0)
        return;
    const int chunks = 8;  // intermediate widen checks; each drift is exact
    const double dt = duration / chunks;
    const int max_points = 1 << 22;
    for (int c = 0; c < chunks; ++c) {
        widen_if_needed(state, max_points);
        const int n = state.size();
        Fft fft(state.psi);
        fft.forward();
        for (int j = 0; j < n; ++j) {
            const double k = bin_k(j, n, state.dx);
            state.psi[j] *= std::polar(1.0, -hbar * k * k * dt / (2.0 * mass));
        }
        fft.backward_normalized(state.psi);
        state.t += dt;
    }
    widen_if_needed(state, max_points);
}

GridMoments grid_moments(const GridState& state, double hbar) {
    const int n = state.size();
    GridMoments m;

    double norm = 0, xbar = 0;
    for (int i = 0; i < n; ++i) {
        const double d = std::norm(state.psi[i]);
        norm += d;
        xbar += d * state.x(i);
    }
    norm *= state.dx;
    xbar *= state.dx / norm;
    double sxx = 0;
    for (int i = 0; i < n; ++i) {
        const double d = state.x(i) - xbar;
        sxx += std::norm(state.psi[i]) * d * d;
    }
    sxx *= state.dx / norm;

    // p psi via the spectral derivative, then momentum moments as inner
    // products (p is hermitian, so <p^2> = ||p psi||^2).
    std::vector<std::complex<double>> p_psi = state.psi;
    {
        Fft fft(p_psi);
        fft.forward();
        for (int j = 0; j < n; ++j)
            p_psi[j] *= hbar * bin_k(j, n, state.dx);
        fft.backward_normalized(p_psi);
    }
    std::complex<double> xp{0, 0};
    double pbar = 0, pp = 0;
    for (int i = 0; i < n; ++i) {
        const std::complex<double> conj_psi = std::conj(state.psi[i]);
        pbar += (conj_psi * p_psi[i]).real();
        pp += std::norm(p_psi[i]);
        xp += conj_psi * state.x(i) * p_psi[i];
    }
    pbar *= state.dx / norm;
    pp *= state.dx / norm;

    m.norm = norm;
    m.xbar = xbar;
    m.pbar = pbar;
    m.sigma_xx2 = sxx;
    m.sigma_pp2 = pp - pbar * pbar;
    m.sigma_xp = xp.real() * state.dx / norm - xbar * pbar;
    return m;
}

std::complex<double> overlap(const GridState& a, const GridState& b) {
    if (a.size() != b.size() || a.dx != b.dx || a.x_min != b.x_min)
        throw GridMismatch();
    std::complex<double> acc{0, 0};
    for (int i = 0; i < a.size(); ++i)
        acc += std::conj(b.psi[i]) * a.psi[i];
    return acc * a.dx;
}

double on_axis_phase(const GridState& state) {
    const GridMoments m = grid_moments(state, 1.0);
    int i = static_cast<int>(std::lround((m.xbar - state.x_min) / state.dx));
    i = std::max(0, std::min(state.size() - 1, i));
    return std::arg(state.psi[i]);
}

void dump_density_csv(const GridState& state, std::ostream& out) {
    out << "x_m,density_per_m\n";
    for (int i = 0; i < state.size(); ++i)
        out << format_double(state.x(i)) << ',' << format_double(std::norm(state.psi[i])) << '\n';
}

}  // namespace qlens::oracle
