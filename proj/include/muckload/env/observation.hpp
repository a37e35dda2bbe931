#pragma once

#include <array>

#include "muckload/common/units.hpp"
#include "muckload/lhd/lhd.hpp"
#include "muckload/pile/muck_pile.hpp"
#include "muckload/pile/zones.hpp"

namespace muckload::env {

inline constexpr std::size_t kObservationSize = 12;
using Observation = std::array<double, kObservationSize>;

/// Component order of an Observation.
enum ObsIndex : std::size_t {
    kObsX,
    kObsY,
    kObsZ,
    kObsPitch,
    kObsBoom,
    kObsBoomRate,
    kObsBucket,
    kObsBucketRate,
    kObsSpeed,
    kObsDrift,
    kObsSlope,
    kObsEndDistance,
};

struct ObservationConfig {
    double x_init = 0.1;  // zone starts this far before the pile toe
    double x_length = 1.1;
    double y_width = 0.4;
    double z_height = 0.4;
    double slope_min = deg2rad(15.0);
    double slope_max = deg2rad(30.0);
    double speed_max = 0.37;
    double end_distance_max = 0.87;

    void validate() const;
};

/// Normalizes the machine state. `observed_slope` is the slope reported to
/// the agent, which may differ from the true one. Out-of-range values are
/// clamped.
Observation build_observation(const lhd::LhdState& state, const lhd::LhdGeometry& geom,
                              const lhd::ActuatorLimits& limits, const pile::MuckPile& pile,
                              const pile::Zones& zones, double observed_slope, const ObservationConfig& cfg);

/// Lower and upper bound of each component.
std::array<double, 2> observation_bounds(std::size_t index);

}  // namespace muckload::env
