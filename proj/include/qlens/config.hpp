#pragma once

#include <iosfwd>
#include <string>

#include "qlens/constants.hpp"

namespace qlens {

enum class DistributionKind { fock, coherent, thermal };

std::string to_string(DistributionKind kind);
DistributionKind distribution_kind_from_string(const std::string& name);

// Physical parameters of one atom/cavity run plus derived scales.
// All values SI. Immutable after validate_config.
struct AtomFieldConfig {
    double mass = 0;             // m [kg]
    double wavelength = 0;       // lambda [m]
    double rabi_frequency = 0;   // Omega_0 [rad/s]
    double detuning = 0;         // Delta [rad/s]; may be negative (red detuning)
    double cavity_length = 0;    // L [m]
    double velocity = 0;         // v_z [m/s]
    double beam_width = 0;       // b_0 [m]
    double mode_offset = 0;      // x_0 [m], displacement of the field node from the beam axis
    double hbar = kHbar;         // [J s], fixed constant

    // Coupling amplitude [J]; defaults to hbar Omega_0^2 / (2 Delta) so that the
    // curvature at a node is g2 = hbar Omega_0^2 k^2 / Delta.
    double g_max = 0;
    bool g_max_overridden = false;

    DistributionKind distribution_kind = DistributionKind::coherent;
    double distribution_parameter = 0;  // n for fock, nbar otherwise
    double tail_budget = 1e-12;

    // Derived (filled by validate_config).
    double wavenumber = 0;        // k = 2 pi / lambda
    double interaction_time = 0;  // t_L = L / v_z
    double rayleigh_time = 0;     // tau_0 = m b_0^2 / hbar
};

// Checks positivity/consistency and fills the derived quantities.
// Throws NonPositiveParameter or ZeroDetuning.
AtomFieldConfig validate_config(AtomFieldConfig raw);

// Plain-text key=value format, one key per line, '#' comments.
AtomFieldConfig parse_config(std::istream& in);
AtomFieldConfig parse_config_file(const std::string& path);

// Canonical serialization (SI keys only, shortest round-trip floats).
// parse(serialize(cfg)) reproduces every field and derived value bit-for-bit.
std::string serialize_config(const AtomFieldConfig& cfg);

// 4 pi^2 n Omega_0^2 b_0^2 / (Delta lambda^2).  Linear and homogeneous in n;
// small magnitudes justify the photon-number-potential picture.
double dispersive_ratio(const AtomFieldConfig& cfg, double n);

inline constexpr double kDispersiveWarnThreshold = 0.1;

}  // namespace qlens
