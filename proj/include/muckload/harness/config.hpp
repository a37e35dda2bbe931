#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "muckload/baselines/heuristic.hpp"
#include "muckload/env/environment.hpp"
#include "muckload/rl/trainer.hpp"

namespace muckload::harness {

/// Every tunable constant of a run. Angles are stored in radians and written
/// to TOML in degrees (keys ending in _deg).
struct RunConfig {
    env::EnvConfig env;
    rl::TrainConfig train;
    baselines::HeuristicConfig heuristic;
    double success_load = 20.0;            // kg, trial succeeds above this
    double success_pitch = deg2rad(40.0);  // rad, and above this final pitch

    void validate() const;
};

/// Parsed configuration together with the text it came from. Runs that must
/// be replayed later embed `text` so the replay parses exactly the same values.
struct ConfigSource {
    std::string text;
    RunConfig config;
};

/// Sections [env], [reward], [ddpg], [lhd], [soil], [heuristic]. Missing keys
/// keep their defaults; unknown sections or keys raise ConfigError.
RunConfig parse_config(std::string_view toml_text, std::string_view source = "config");

ConfigSource load_config(const std::filesystem::path& path);

/// The defaults, rendered and reparsed.
ConfigSource default_config();

ConfigSource config_from_text(std::string text);

/// Full TOML rendering with every key.
std::string render_config(const RunConfig& cfg);

}  // namespace muckload::harness
