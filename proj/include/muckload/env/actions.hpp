#pragma once

#include <array>
#include <string>
#include <utility>

#include "muckload/lhd/lhd.hpp"

namespace muckload::env {

/// Normalized (wheels, boom, bucket), each in [-1, 1].
using Action = std::array<double, 3>;

enum class Mode { rlc_train, rld_train, rlc_deploy, rld_deploy };

std::string to_string(Mode mode);
Mode mode_from_string(const std::string& name);
bool is_rld(Mode mode);

Action clamp_action(const Action& a);

/// Affine map of each component onto its actuator speed range.
lhd::Commands denormalize_action(const Action& a, const lhd::ActuatorLimits& limits = {});

/// Inverse of denormalize_action.
Action normalize_commands(const lhd::Commands& cmds, const lhd::ActuatorLimits& limits = {});

/// +1 if a > threshold, else -1.
double action_filter(double a, double threshold = 0.0);

/// Snaps a nearly-still boom or bucket command to its resting extreme.
std::pair<double, double> rlc_deploy_filter(double boom, double bucket);

/// Filter for the given mode, applied after clamping; wheels pass through.
Action filter_action(const Action& a, Mode mode, double threshold = 0.0);

}  // namespace muckload::env
