#pragma once

#include "muckload/common/geometry.hpp"
#include "muckload/pile/muck_pile.hpp"

namespace muckload::pile {

/// How one voxel column meets the tool face.
struct ColumnEngagement {
    double depth = 0.0;       // m, material height in front of the tool
    double rake = deg2rad(45.0);  // rad, tool face angle from horizontal
    double width = 0.0;       // m, column width
    double surcharge = 0.0;   // Pa, pressure acting on the failure surface
    double velocity_x = 0.0;  // m/s, tool speed along x
};

struct FeeOptions {
    /// Coefficient of the optional velocity-squared term k_v * gamma * d * w * v^2.
    double inertial_coefficient = 0.0;
    double wedge_min = deg2rad(1.0);
    double wedge_max = deg2rad(89.0);  // upper bound on wedge + internal friction
};

struct ColumnForce {
    double fx = 0.0;           // N, along x (opposes forward motion)
    double fz = 0.0;           // N, along z (positive up)
    double resistance = 0.0;   // N, magnitude P
    double wedge_angle = 0.0;  // rad, minimizing failure-wedge angle
};

/// Resistance P for a given failure-wedge angle; +infinity where the wedge
/// is not admissible.
double fee_resistance(const SoilParameters& soil, const ColumnEngagement& engagement, double wedge_angle);

/// Admissible wedge-angle interval (lo, hi) for this soil/rake pair.
/// Throws GeometryError when the interval is empty.
std::pair<double, double> fee_wedge_interval(const SoilParameters& soil, double rake,
                                             const FeeOptions& options = {});

/// Passive-wedge earth-moving force on one column, minimized over the
/// failure-wedge angle.
ColumnForce fee_column_force(const SoilParameters& soil, const ColumnEngagement& engagement,
                             const FeeOptions& options = {});

struct ForceModel {
    double bucket_width = 0.4;
    double rake_min = deg2rad(2.0);
    double rake_max = deg2rad(88.0);
    FeeOptions fee;
};

struct BucketForce {
    Force3 force;
    int engaged_columns = 0;
};

double rake_from_pitch(double pitch, const ForceModel& model = {});

/// Soil parameters averaged over the voxels of column (i, j) between the tip
/// height and the surface.
SoilParameters column_soil(const MuckPile& pile, int i, int j, double z_tip, double z_surface);

/// Sum of column forces over every column engaged by the tip.
BucketForce total_bucket_force(const MuckPile& pile, const TipPose& tip, Point2 tip_velocity,
                               const ForceModel& model = {});

}  // namespace muckload::pile
