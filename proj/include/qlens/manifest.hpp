#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qlens/config.hpp"
#include "qlens/distribution.hpp"
#include "qlens/lens.hpp"

namespace qlens {

inline constexpr std::string_view kVersion = "0.1.0";

struct ChannelFlags {
    int n = 0;
    bool thin_lens_ok = false;
    bool virtual_focus = false;
    bool expulsive = false;
};

// Reproducibility record emitted alongside sweep outputs.  The run id hashes
// the canonical config plus the resolved command arguments, so identical
// inputs always map to the same id (thread count excluded on purpose).
struct RunManifest {
    std::string command;
    std::string arguments;    // canonicalized argument summary
    std::string config_echo;  // serialize_config output
    std::string distribution_kind;
    double distribution_parameter = 0;
    int n_truncation = 0;
    double tail_budget = 0;
    std::string lens_model;
    std::vector<ChannelFlags> channels;
    std::string version{kVersion};
    std::string run_id;  // 16 hex digits
};

std::uint64_t fnv1a64(std::string_view bytes);

RunManifest make_manifest(const std::string& command, const std::string& arguments,
                          const AtomFieldConfig& cfg, const PhotonDistribution& dist,
                          std::span<const LensResult> lenses, LensModel model);

std::string to_json(const RunManifest& manifest);

}  // namespace qlens
