#pragma once

#include <stdexcept>
#include <string>

namespace qlens {

// Error families map to CLI exit codes: ConfigError -> 2, NumericError -> 3.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct NumericError : Error {
    using Error::Error;
};

struct NonPositiveParameter : ConfigError {
    explicit NonPositiveParameter(const std::string& field)
        : ConfigError("parameter must be strictly positive: " + field) {}
};

struct ZeroDetuning : ConfigError {
    ZeroDetuning() : ConfigError("detuning must be nonzero (dispersive model undefined at resonance)") {}
};

struct NegativeParameter : ConfigError {
    explicit NegativeParameter(const std::string& what)
        : ConfigError("parameter must be non-negative: " + what) {}
};

// Inflection point of the mode intensity: no quadratic term, no harmonic lens.
struct DegenerateCurvature : NumericError {
    DegenerateCurvature() : NumericError("coupling curvature vanishes at the beam axis (cos(2 k x0) ~ 0)") {}
};

struct OutOfStage : NumericError {
    explicit OutOfStage(const std::string& what) : NumericError("time outside evolution stage: " + what) {}
};

struct MissingChannel : NumericError {
    explicit MissingChannel(int n)
        : NumericError("no lens result for photon number n = " + std::to_string(n)) {}
};

struct InconsistentMoments : NumericError {
    explicit InconsistentMoments(const std::string& what)
        : NumericError("quality factor cross-check failed (implementation bug): " + what) {}
};

struct BlowUp : NumericError {
    explicit BlowUp(const std::string& what) : NumericError("integration blow-up: " + what) {}
};

struct GridTooSmall : NumericError {
    explicit GridTooSmall(const std::string& what) : NumericError("grid too small: " + what) {}
};

struct StepTooLarge : NumericError {
    explicit StepTooLarge(const std::string& what) : NumericError("step too large: " + what) {}
};

struct GridMismatch : NumericError {
    GridMismatch() : NumericError("grid states live on different grids") {}
};

}  // namespace qlens
