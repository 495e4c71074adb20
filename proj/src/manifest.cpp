#include "qlens/manifest.hpp"

#include <json.hpp>

#include "qlens/numeric.hpp"

namespace qlens {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (const unsigned char c : bytes) {
        hash ^= c;
        hash *= 0x100000001b3ull;
    }
    return hash;
}

RunManifest make_manifest(const std::string& command, const std::string& arguments,
                          const AtomFieldConfig& cfg, const PhotonDistribution& dist,
                          std::span<const LensResult> lenses, LensModel model) {
    RunManifest m;
    m.command = command;
    m.arguments = arguments;
    m.config_echo = serialize_config(cfg);
    m.distribution_kind = to_string(dist.kind);
    m.distribution_parameter = dist.parameter;
    m.n_truncation = dist.max_n();
    m.tail_budget = cfg.tail_budget;
    m.lens_model = model == LensModel::exact ? "exact" : "thin";
    for (const LensResult& lens : lenses)
        m.channels.push_back({lens.n, lens.thin.ok_phi && lens.thin.ok_squeeze,
                              lens.virtual_focus, lens.expulsive});

    char id[17];
    std::snprintf(id, sizeof(id), "%016llx",
                  static_cast<unsigned long long>(
                      fnv1a64(m.config_echo + '\n' + command + '\n' + arguments + '\n' + m.lens_model)));
    m.run_id = id;
    return m;
}

std::string to_json(const RunManifest& manifest) {
    nlohmann::json channels = nlohmann::json::array();
    for (const ChannelFlags& ch : manifest.channels)
        channels.push_back({{"n", ch.n},
                            {"thin_lens_ok", ch.thin_lens_ok},
                            {"virtual_focus", ch.virtual_focus},
                            {"expulsive", ch.expulsive}});
    const nlohmann::json j = {
        {"version", manifest.version},
        {"run_id", manifest.run_id},
        {"command", manifest.command},
        {"arguments", manifest.arguments},
        {"config", manifest.config_echo},
        {"distribution",
         {{"kind", manifest.distribution_kind},
          {"parameter", manifest.distribution_parameter},
          {"n_truncation", manifest.n_truncation},
          {"tail_budget", manifest.tail_budget}}},
        {"lens_model", manifest.lens_model},
        {"channels", channels},
    };
    return j.dump(2) + "\n";
}

}  // namespace qlens
