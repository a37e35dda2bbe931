#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "muckload/env/actions.hpp"
#include "muckload/env/observation.hpp"
#include "muckload/lhd/lhd.hpp"
#include "muckload/pile/fee.hpp"
#include "muckload/pile/muck_pile.hpp"
#include "muckload/pile/swept.hpp"
#include "muckload/pile/zones.hpp"
#include "muckload/rewards/rewards.hpp"

namespace muckload::env {

using rewards::Status;

struct EpisodeConfig {
    double attack_min = 0.1;  // m, machine starts this far before the pile
    double attack_max = 0.2;
    double d_init = 0.1;  // m, tip penetration that starts the episode
    int max_steps = 200;
    double control_period = 0.1;  // s
    double reset_timeout = 10.0;  // s allowed for the roll-in
    std::optional<double> fixed_slope;  // rad, overrides the pile slope range
    double slope_observation_error = 0.0;  // rad, added to the reported slope
    double action_threshold = 0.0;
    ObservationConfig observation;

    void validate() const;
};

struct EnvConfig {
    EpisodeConfig episode;
    pile::PileConfig pile;
    pile::ZoneConfig zones;
    pile::ForceModel force;
    lhd::LhdGeometry geometry;
    lhd::DynamicsParams dynamics;
    rewards::RewardConfig reward;

    void validate() const;
};

struct StepInfo {
    lhd::LhdState state;
    TipPose tip;
    Point2 bottom;
    Force3 force;
    double load = 0.0;
    Action executed_action{};
    lhd::Commands commands;
    int t = 0;
};

struct StepOutcome {
    Observation observation{};
    rewards::RewardBreakdown reward;
    Status status = Status::running;
    StepInfo info;
};

/// Facts fixed at reset.
struct EpisodeStart {
    std::uint64_t seed = 0;
    double slope = 0.0;
    double observed_slope = 0.0;
    double d_attack = 0.0;
    double attack_speed = 0.0;
    double x_midgoal = 0.0;
    pile::Zones zones;
};

/// One loading episode at a time. Not thread-safe; use one instance per thread.
class Environment {
public:
    explicit Environment(EnvConfig config);

    /// Generates a pile, places the machine in the attack pose and rolls it in
    /// until the tip is d_init inside the pile.
    Observation reset(std::uint64_t seed);

    StepOutcome step(const Action& action, Mode mode);

    bool done() const { return status_ != Status::running; }
    bool open() const { return started_ && !done(); }
    Status status() const { return status_; }
    int t() const { return t_; }

    const EnvConfig& config() const { return config_; }
    const pile::MuckPile& pile() const { return pile_; }
    const pile::Zones& zones() const { return zones_; }
    const EpisodeStart& start() const { return start_; }
    const lhd::LhdState& state() const { return state_; }
    TipPose tip() const;
    Point2 bottom() const;
    double load() const { return state_.load; }
    const Observation& observation() const { return observation_; }
    const std::vector<Point2>& tip_path() const { return path_; }
    int drift_steps_front() const { return drift_front_steps_; }
    int drift_steps_rear() const { return drift_rear_steps_; }

private:
    void advance(const lhd::Commands& cmds, const Force3& force, double duration);
    Force3 bucket_force() const;
    Observation observe() const;

    EnvConfig config_;
    pile::MuckPile pile_;
    pile::Zones zones_;
    pile::SurfaceProfile surface_;
    pile::SweptEnvelope envelope_;
    rewards::Rail rail_;
    EpisodeStart start_;
    lhd::LhdState state_;
    Observation observation_{};
    std::vector<Point2> path_;
    std::vector<double> displacements_;
    Status status_ = Status::running;
    bool started_ = false;
    int t_ = 0;
    int drift_front_steps_ = 0;
    int drift_rear_steps_ = 0;
};

Status classify_termination(const TipPose& tip, const pile::Zones& zones, int t, int max_steps);

}  // namespace muckload::env
