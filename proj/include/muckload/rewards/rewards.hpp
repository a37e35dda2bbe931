#pragma once

#include <span>
#include <string>

#include "muckload/common/geometry.hpp"
#include "muckload/common/units.hpp"
#include "muckload/lhd/lhd.hpp"
#include "muckload/pile/swept.hpp"
#include "muckload/pile/zones.hpp"

namespace muckload::rewards {

/// How the two command magnitudes combine in the inactivity penalty.
enum class InactivityRule {
    any,   // penalize if either command is below its threshold
    both,  // penalize only if both are
};

std::string to_string(InactivityRule rule);
InactivityRule inactivity_rule_from_string(const std::string& name);

struct RewardConfig {
    double traj = 60.0;
    double midgoal = 25.0;
    double midgoal_max_distance = 0.44;
    double inact = 50.0;
    double inact_boom_threshold = 0.5;
    double inact_bucket_threshold = 0.5;
    InactivityRule inact_rule = InactivityRule::any;
    double drift = 5.0;
    double stuck = 5.0;
    int stuck_steps = 8;
    double stuck_threshold = 0.005;
    double dump = 20.0;
    double dump_pitch = deg2rad(40.0);
    double bottom = 5.0;
    double weight = 1.0;
    double success = 40.0;
    double target_weight = 30.0;
    double target_pitch = deg2rad(40.0);
    double weight_threshold = 1.0;    // kg
    double pitch_threshold = 5.0;     // deg
    double weight_max_distance = 30.0;
    double pitch_max_distance = 40.0;  // deg
    bool weight_one_sided = true;      // loads above target score as on target
    double zone = 2000.0;
    double rail_exponent = 17.0;
    double rail_x_delta = 0.05;
    double rail_span = 0.25;  // rail crosses the floor this far before x_max
    bool traj_forward_positive = true;

    void validate() const;
};

struct RewardBreakdown {
    double traj = 0.0;
    double midgoal = 0.0;
    double inact = 0.0;
    double drift = 0.0;
    double stuck = 0.0;
    double dump = 0.0;
    double bottom = 0.0;
    double weight = 0.0;
    double success = 0.0;
    double zone = 0.0;

    double total() const;
    RewardBreakdown& operator+=(const RewardBreakdown& other);
    bool operator==(const RewardBreakdown&) const = default;
};

/// Rail curve z = (x + x_delta + x_offset - x_max)^n - z_offset.
struct Rail {
    double x_offset = 0.0;
    double z_offset = 0.0;
    double x_delta = 0.05;
    double x_max = 0.0;
    double exponent = 17.0;
};

/// Places the rail so it crosses the floor at x_max - span and reaches z_min at x_max.
Rail solve_rail(const pile::Zones& zones, const RewardConfig& cfg);
double rail_height(double x_shovel, const Rail& rail);

struct StepContext {
    TipPose tip;
    TipPose prev_tip;
    std::span<const double> displacements;  // tip x-displacements, oldest first, newest last
    lhd::Commands cmds;
    lhd::ActuatorLimits limits;
    bool drift = false;
    Point2 bottom;
    pile::SurfaceProfile surface;
    double load = 0.0;
    pile::Zones zones;
    double pile_height = 0.0;
    double x_midgoal = 0.0;
    Rail rail;
};

/// Angles of the displacement, lower-bound and upper-bound vectors (rad).
struct TrajectoryAngles {
    double shovel = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    bool moved = false;
};

TrajectoryAngles trajectory_angles(const StepContext& ctx, const RewardConfig& cfg);

RewardBreakdown compute_step_reward(const StepContext& ctx, const RewardConfig& cfg);

double delta_score(double x, double x_target, double rho_thresh, double max_dist);

enum class Status { running, success, restricted, timeout };

std::string to_string(Status status);

RewardBreakdown compute_terminal_reward(Status status, double final_load, double final_pitch,
                                        const RewardConfig& cfg);

int success_level(double final_load, double final_pitch, double pitch_threshold);

}  // namespace muckload::rewards
