#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "muckload/harness/config.hpp"
#include "muckload/rl/ddpg.hpp"

namespace muckload::harness {

enum class Controller { rlc, rld, heuristic, teleop };

std::string to_string(Controller c);
Controller controller_from_string(const std::string& name);

enum class Material { homogeneous, nonhomogeneous };

std::string to_string(Material m);
Material material_from_string(const std::string& name);

/// Large rocks become clustered high-density voxels.
pile::SoilRanges material_soil(Material m, const pile::SoilRanges& base);

/// One loading attempt. Angles in degrees, drift in percent of steps.
struct TrialRecord {
    std::string controller;
    double slope = 0.0;
    std::string material;
    double error = 0.0;
    std::uint64_t seed = 0;
    bool success = false;
    double material_loaded = 0.0;  // kg
    double elapsed_time = 0.0;     // s, from the end of the roll-in
    double frontal_drift = 0.0;
    double rear_drift = 0.0;
    double final_pitch = 0.0;
    std::string status;  // success, restricted, timeout, stopped or aborted
    int steps = 0;
    int lift_events = 0;
    bool valid = true;  // false for aborted live sessions
    std::string log_path;

    bool operator==(const TrialRecord&) const = default;
};

inline constexpr const char* kTrialHeader =
    "controller,slope_deg,material,error_deg,seed,success,material_loaded,elapsed_time,frontal_drift,rear_drift,"
    "final_pitch_deg,status,steps,lift_events,valid,log_path";

std::string format_trial_row(const TrialRecord& r);
TrialRecord parse_trial_row(const std::string& line);
void write_trials_csv(std::ostream& os, const std::vector<TrialRecord>& rows);
std::vector<TrialRecord> read_trials_csv(std::istream& is);

nlohmann::json trial_json(const TrialRecord& r);
TrialRecord trial_from_json(const nlohmann::json& j);

/// Counts separate lifts of the tip that each rise at least `min_rise`.
/// A lift continues while the tip climbs more than `step_rise` per step and
/// rises more than it advances; driving up the slope is not a lift.
int count_lift_events(const std::vector<Point2>& tip_path, double min_rise = 0.01, double step_rise = 1e-3);

/// Success rule shared by every controller.
bool trial_success(double load, double pitch, const RunConfig& cfg);

/// Environment for one experiment cell.
env::EnvConfig trial_env_config(const RunConfig& cfg, double slope_deg, Material material, double error_deg);

struct TrialSetup {
    Controller controller = Controller::rld;
    double slope = 30.0;  // deg
    Material material = Material::homogeneous;
    double error = 0.0;  // deg
    std::uint64_t seed = 0;
    bool deploy_filters = true;                 // RL controllers only
    std::optional<std::filesystem::path> log;   // JSON-lines episode log
    std::string log_name;                       // recorded log_path; defaults to `log`
};

/// Runs one autonomous trial. RL controllers need an agent of the matching
/// kind; the heuristic ignores it. The tip trajectory is copied to `tip_path`
/// when given.
TrialRecord run_trial(const TrialSetup& setup, const ConfigSource& cfg, const rl::Agent* agent = nullptr,
                      std::vector<Point2>* tip_path = nullptr);

/// Summary of a finished environment episode. `stopped` marks a controller
/// that ended the attempt before any terminal state.
TrialRecord summarize_trial(const env::Environment& env, const RunConfig& cfg, const std::string& controller,
                            const std::string& material, double error_deg, bool stopped);

/// Replays the raw actions of an episode log and compares every step record.
struct ReplayReport {
    int steps = 0;
    int mismatches = 0;
    int first_mismatch = -1;  // step index, -1 if none
    std::optional<TrialRecord> logged;
    std::optional<TrialRecord> replayed;

    bool ok() const { return mismatches == 0 && (!logged || logged == replayed); }
};

ReplayReport replay_log(const std::filesystem::path& path);

}  // namespace muckload::harness
