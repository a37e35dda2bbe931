#pragma once

#include <filesystem>
#include <fstream>
#include <vector>

#include <json.hpp>

#include "muckload/env/environment.hpp"

namespace muckload::env {

nlohmann::json reward_json(const rewards::RewardBreakdown& r);
rewards::RewardBreakdown reward_from_json(const nlohmann::json& j);

/// First line of an episode log: seed, mode, slope and zones. `extra` is
/// merged in at top level.
nlohmann::json episode_header(const Environment& env, Mode mode, const nlohmann::json& extra = nlohmann::json::object());

nlohmann::json step_record(const Action& raw_action, const StepOutcome& outcome);

/// Writes one JSON document per line.
class JsonlWriter {
public:
    explicit JsonlWriter(const std::filesystem::path& path);
    void write(const nlohmann::json& record);

private:
    std::ofstream out_;
};

std::vector<nlohmann::json> read_jsonl(const std::filesystem::path& path);

}  // namespace muckload::env
