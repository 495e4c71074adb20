#include "qlens/config.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "qlens/errors.hpp"
#include "qlens/numeric.hpp"

namespace qlens {

std::string to_string(DistributionKind kind) {
    switch (kind) {
        case DistributionKind::fock: return "fock";
        case DistributionKind::coherent: return "coherent";
        case DistributionKind::thermal: return "thermal";
    }
    return "?";
}

DistributionKind distribution_kind_from_string(const std::string& name) {
    if (name == "fock") return DistributionKind::fock;
    if (name == "coherent") return DistributionKind::coherent;
    if (name == "thermal") return DistributionKind::thermal;
    throw ConfigError("unknown distribution_kind: '" + name + "'");
}

AtomFieldConfig validate_config(AtomFieldConfig raw) {
    const auto positive = [](double value, const char* field) {
        if (!(value > 0) || !std::isfinite(value))
            throw NonPositiveParameter(field);
    };
    positive(raw.mass, "mass_kg");
    positive(raw.wavelength, "wavelength_m");
    positive(raw.rabi_frequency, "rabi_frequency_rad_s");
    positive(raw.cavity_length, "cavity_length_m");
    positive(raw.velocity, "longitudinal_velocity_m_s");
    positive(raw.beam_width, "beam_width_m");
    if (raw.detuning == 0 || !std::isfinite(raw.detuning))
        throw ZeroDetuning();
    if (!std::isfinite(raw.mode_offset))
        throw ConfigError("mode_offset_m must be finite");
    if (raw.distribution_parameter < 0)
        throw NegativeParameter("distribution_parameter");
    if (!(raw.tail_budget > 0) || raw.tail_budget > 1e-6)
        throw ConfigError("tail_budget must lie in (0, 1e-6]");

    if (!raw.g_max_overridden)
        raw.g_max = raw.hbar * raw.rabi_frequency * raw.rabi_frequency / (2.0 * raw.detuning);
    if (raw.g_max == 0 || !std::isfinite(raw.g_max))
        throw ConfigError("g_max_joule must be nonzero and finite");

    raw.wavenumber = 2.0 * kPi / raw.wavelength;
    raw.interaction_time = raw.cavity_length / raw.velocity;
    raw.rayleigh_time = raw.mass * raw.beam_width * raw.beam_width / raw.hbar;
    return raw;
}

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

}  // namespace

AtomFieldConfig parse_config(std::istream& in) {
    std::map<std::string, std::string> kv;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty())
            throw ConfigError("line " + std::to_string(line_no) + ": empty key or value");
        if (!kv.emplace(key, value).second)
            throw ConfigError("duplicate key: '" + key + "'");
    }

    const auto take = [&kv](const char* key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end())
            return std::nullopt;
        std::string value = it->second;
        kv.erase(it);
        return value;
    };
    const auto require = [&take](const char* key) {
        auto value = take(key);
        if (!value)
            throw ConfigError(std::string("missing required key: '") + key + "'");
        return parse_double(*value);
    };

    AtomFieldConfig cfg;
    cfg.mass = require("mass_kg");
    cfg.wavelength = require("wavelength_m");

    const auto rabi_rad = take("rabi_frequency_rad_s");
    const auto rabi_hz = take("rabi_frequency_over_2pi_hz");
    if (rabi_rad && rabi_hz)
        throw ConfigError("rabi_frequency_rad_s and rabi_frequency_over_2pi_hz are mutually exclusive");
    if (rabi_rad)
        cfg.rabi_frequency = parse_double(*rabi_rad);
    else if (rabi_hz)
        cfg.rabi_frequency = 2.0 * kPi * parse_double(*rabi_hz);
    else
        throw ConfigError("missing required key: 'rabi_frequency_rad_s' (or 'rabi_frequency_over_2pi_hz')");

    cfg.detuning = require("detuning_rad_s");
    cfg.cavity_length = require("cavity_length_m");
    cfg.velocity = require("longitudinal_velocity_m_s");

    const auto width_m = take("beam_width_m");
    const auto width_rel = take("beam_width_over_wavelength");
    if (width_m && width_rel)
        throw ConfigError("beam_width_m and beam_width_over_wavelength are mutually exclusive");
    if (width_m)
        cfg.beam_width = parse_double(*width_m);
    else if (width_rel)
        cfg.beam_width = parse_double(*width_rel) * cfg.wavelength;
    else
        throw ConfigError("missing required key: 'beam_width_m' (or 'beam_width_over_wavelength')");

    if (const auto offset = take("mode_offset_m"))
        cfg.mode_offset = parse_double(*offset);
    if (const auto gmax = take("g_max_joule")) {
        cfg.g_max = parse_double(*gmax);
        cfg.g_max_overridden = true;
    }
    if (const auto kind = take("distribution_kind"))
        cfg.distribution_kind = distribution_kind_from_string(*kind);
    if (const auto parameter = take("distribution_parameter"))
        cfg.distribution_parameter = parse_double(*parameter);
    if (const auto tail = take("tail_budget"))
        cfg.tail_budget = parse_double(*tail);

    if (!kv.empty())
        throw ConfigError("unknown key: '" + kv.begin()->first + "'");
    return validate_config(cfg);
}

AtomFieldConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open config file: " + path);
    return parse_config(in);
}

std::string serialize_config(const AtomFieldConfig& cfg) {
    std::ostringstream out;
    out << "mass_kg=" << format_double(cfg.mass) << '\n'
        << "wavelength_m=" << format_double(cfg.wavelength) << '\n'
        << "rabi_frequency_rad_s=" << format_double(cfg.rabi_frequency) << '\n'
        << "detuning_rad_s=" << format_double(cfg.detuning) << '\n'
        << "cavity_length_m=" << format_double(cfg.cavity_length) << '\n'
        << "longitudinal_velocity_m_s=" << format_double(cfg.velocity) << '\n'
        << "beam_width_m=" << format_double(cfg.beam_width) << '\n'
        << "mode_offset_m=" << format_double(cfg.mode_offset) << '\n';
    if (cfg.g_max_overridden)
        out << "g_max_joule=" << format_double(cfg.g_max) << '\n';
    out << "distribution_kind=" << to_string(cfg.distribution_kind) << '\n'
        << "distribution_parameter=" << format_double(cfg.distribution_parameter) << '\n'
        << "tail_budget=" << format_double(cfg.tail_budget) << '\n';
    return out.str();
}

double dispersive_ratio(const AtomFieldConfig& cfg, double n) {
    const double base = 4.0 * kPi * kPi * cfg.rabi_frequency * cfg.rabi_frequency *
                        cfg.beam_width * cfg.beam_width /
                        (cfg.detuning * cfg.wavelength * cfg.wavelength);
    return n * base;
}

}  // namespace qlens
