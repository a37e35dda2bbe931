#pragma once

#include "muckload/common/geometry.hpp"
#include "muckload/common/units.hpp"

namespace muckload::lhd {

/// Speed ranges of the three actuators.
struct ActuatorLimits {
    double wheels_min = 0.0;  // rad/s
    double wheels_max = 2.7;
    double boom_min = -0.191;  // rad/s, negative raises the boom
    double boom_max = 0.0;
    double bucket_min = 0.0;  // rad/s, positive curls the bucket back
    double bucket_max = 0.2;
};

/// Planar arm and chassis layout of the scaled machine. Lengths in metres,
/// measured in the XZ plane from the rear axle at ground level.
///
/// The boom angle is measured downward from horizontal, so raising the boom
/// decreases it. The bucket angle is zero in the attack pose and grows as the
/// bucket curls back. Raising the boom alone tilts the bucket forward:
/// tip pitch = bucket + boom - attack boom angle.
struct LhdGeometry {
    double axle_spacing = 0.55;
    double boom_pivot_x = 0.45;
    double boom_pivot_z = 0.35;
    double boom_length = 0.75;
    Point2 tip_offset{0.25, -0.08};      // tip relative to the bucket pivot, bucket frame
    Point2 bottom_offset{-0.22, 0.02};   // bucket bottom B relative to the tip, bucket frame
    double wheel_radius = 0.37 / 2.7;
    double bucket_width = 0.4;
    double machine_mass = 121.0;
    double front_mass = 60.5;
    double rear_mass = 60.5;
    double bucket_capacity = 30.0;
    double boom_raised_limit = -0.8;  // rad, most raised boom angle
    double bucket_min = 0.0;
    double bucket_max = 1.4;

    /// Boom angle that puts the tip on the ground with zero pitch; also the
    /// lowest boom angle.
    double attack_boom_angle() const;
    double boom_lowest() const { return attack_boom_angle(); }

    void validate() const;
};

struct DynamicsParams {
    double actuator_lag = 0.05;   // s, first-order joint response
    double wheel_spin_up = 0.4;   // s, motor reference lag when speeding up
    double drive_gain = 3000.0;   // N per (m/s) of wheel/chassis speed error, per axle
    double friction = 0.6;        // tyre-floor friction coefficient
    double load_front = 0.7;      // share of bucket load carried by the front axle
    double load_transfer = 0.2;   // share of bucket load taken off the rear axle
    double slip_threshold = 0.2;  // relative wheel/chassis speed mismatch flagged as drift
    double substep = 0.01;        // s
    ActuatorLimits limits;

    void validate() const;
};

struct Commands {
    double wheels = 0.0;
    double boom = 0.0;
    double bucket = 0.0;
};

struct LhdState {
    double x = 0.0;  // rear axle position in the pile frame
    double v_x = 0.0;
    double boom = 0.0;
    double bucket = 0.0;
    double boom_rate = 0.0;
    double bucket_rate = 0.0;
    double wheel_front = 0.0;  // rad/s
    double wheel_rear = 0.0;
    double wheel_reference = 0.0;  // motor speed reference after spin-up
    double load = 0.0;             // kg in the bucket
    double normal_front = 0.0;     // N, axle loads from the last sub-step
    double normal_rear = 0.0;
    bool drift_front = false;
    bool drift_rear = false;

    bool drifting() const { return drift_front || drift_rear; }
    bool operator==(const LhdState&) const = default;
};

struct ArmPose {
    TipPose tip;
    Point2 bottom;
    Point2 boom_pivot;
    Point2 bucket_pivot;
};

ArmPose forward_kinematics(const LhdGeometry& geom, double chassis_x, double boom, double bucket);
ArmPose forward_kinematics(const LhdGeometry& geom, const LhdState& state);

/// State in the attack pose with the tip at `tip_x`, at rest.
LhdState attack_state(const LhdGeometry& geom, double tip_x);

struct DriftFlags {
    bool front = false;
    bool rear = false;
};

DriftFlags detect_drift(const LhdState& state, const Commands& cmds, const LhdGeometry& geom,
                        const DynamicsParams& params = {});

/// Advances one integration sub-step of length h.
LhdState substep(const LhdState& state, const Commands& cmds, const Force3& external, const LhdGeometry& geom,
                 const DynamicsParams& params, double h);

/// Advances dt seconds with the external bucket force held constant.
LhdState step_dynamics(const LhdState& state, const Commands& cmds, const Force3& external,
                       const LhdGeometry& geom, const DynamicsParams& params = {}, double dt = 0.1);

Commands clamp_commands(const Commands& cmds, const ActuatorLimits& limits);

}  // namespace muckload::lhd
