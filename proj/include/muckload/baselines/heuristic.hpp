#pragma once

#include <string>

#include "muckload/common/geometry.hpp"
#include "muckload/common/units.hpp"
#include "muckload/lhd/lhd.hpp"
#include "muckload/pile/zones.hpp"

namespace muckload::baselines {

enum class Phase { charge, dig, lift_pulse, finish };

std::string to_string(Phase p);

struct HeuristicConfig {
    double collision_decel = -0.5;  // m/s^2; more negative = less sensitive
    double stall_speed = 0.05;      // m/s
    int pulse_steps = 4;
    bool alternate_boom = true;     // raise the boom on every other pulse
    double finish_load = 20.0;      // kg
    double finish_pitch = deg2rad(40.0);
    double control_period = 0.1;    // s

    void validate() const;
};

struct HeuristicState {
    Phase phase = Phase::charge;
    int timer = 0;   // steps spent in the current phase
    int pulses = 0;  // lift pulses issued so far
    double prev_speed = 0.0;
    bool done = false;

    bool operator==(const HeuristicState&) const = default;
};

/// What the controller senses each step.
struct HeuristicInput {
    lhd::LhdState state;
    TipPose tip;
    double load = 0.0;
    pile::Zones zones;
};

struct HeuristicOutput {
    lhd::Commands commands;
    HeuristicState next;
};

/// Initial controller state for a machine that has just entered the pile.
HeuristicState heuristic_start(const lhd::LhdState& state);

/// Sequential loading stages: charge until the collision is felt, dig at full
/// throttle, pulse the bucket (and boom) whenever the wheels slip or stall,
/// and curl to the carry angle once enough material is in the bucket.
HeuristicOutput heuristic_step(const HeuristicInput& in, const HeuristicState& hs,
                               const HeuristicConfig& cfg = {}, const lhd::ActuatorLimits& limits = {});

}  // namespace muckload::baselines
