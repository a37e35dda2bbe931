#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "muckload/common/units.hpp"

namespace muckload::pile {

/// Material constants of one voxel, as consumed by the earth-moving equation.
struct SoilParameters {
    double density = 1800.0;                   // kg/m^3
    double cohesion = 0.0;                     // Pa
    double internal_friction = deg2rad(35.0);  // rad
    double tool_friction = deg2rad(17.5);      // rad
    double surcharge = 0.0;                    // Pa, extra draw-point column pressure

    void validate() const;
};

/// Sampling ranges for per-voxel soil parameters (loose gravel by default).
struct SoilRanges {
    double density_min = 1600.0;
    double density_max = 2000.0;
    double cohesion_min = 0.0;
    double cohesion_max = 500.0;
    double friction_min = deg2rad(30.0);
    double friction_max = deg2rad(40.0);
    double tool_friction_ratio = 0.5;  // tool friction = ratio * internal friction
    double surcharge_min = 0.0;
    double surcharge_max = 2000.0;
    double rock_probability = 0.05;    // expected fraction of rock voxels
    double rock_density_factor = 1.8;
    int rock_cluster = 1;              // rocks cover cluster x cluster voxels in the XZ plane

    void validate() const;
};

struct PileShape {
    double height = 0.68;
    double width = 0.4;
    int nx = 60;
    int ny = 7;
    int nz = 10;

    void validate() const;
};

struct PileConfig {
    double slope_min = deg2rad(15.0);
    double slope_max = deg2rad(30.0);
    PileShape shape;
    SoilRanges soil;

    void validate() const;
};

/// Regular voxelization of the pile bounding box. Voxel (i, j, k) spans
/// slice i along x, column j along y and layer k along z.
class VoxelGrid {
public:
    VoxelGrid() = default;
    VoxelGrid(int nx, int ny, int nz, double depth, double width, double height);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nz() const { return nz_; }
    double voxel_depth() const { return d_; }
    double voxel_width() const { return w_; }
    double voxel_height() const { return h_; }
    std::size_t size() const { return soil_.size(); }

    std::size_t index(int i, int j, int k) const
    {
        return (static_cast<std::size_t>(i) * ny_ + j) * nz_ + k;
    }

    const SoilParameters& soil(int i, int j, int k) const { return soil_[index(i, j, k)]; }
    SoilParameters& soil(int i, int j, int k) { return soil_[index(i, j, k)]; }
    bool occupied(int i, int j, int k) const { return occupied_[index(i, j, k)] != 0; }
    void set_occupied(int i, int j, int k, bool value) { occupied_[index(i, j, k)] = value ? 1 : 0; }
    bool rock(int i, int j, int k) const { return rock_[index(i, j, k)] != 0; }
    void set_rock(int i, int j, int k, bool value) { rock_[index(i, j, k)] = value ? 1 : 0; }

    std::size_t occupied_count() const;
    std::span<const SoilParameters> voxels() const { return soil_; }
    std::span<const std::uint8_t> occupancy() const { return occupied_; }
    std::span<const std::uint8_t> rocks() const { return rock_; }

    bool operator==(const VoxelGrid&) const = default;

private:
    int nx_ = 0;
    int ny_ = 0;
    int nz_ = 0;
    double d_ = 0.0;
    double w_ = 0.0;
    double h_ = 0.0;
    std::vector<SoilParameters> soil_;
    std::vector<std::uint8_t> occupied_;
    std::vector<std::uint8_t> rock_;
};

inline bool operator==(const SoilParameters& a, const SoilParameters& b)
{
    return a.density == b.density && a.cohesion == b.cohesion &&
           a.internal_friction == b.internal_friction && a.tool_friction == b.tool_friction &&
           a.surcharge == b.surcharge;
}

/// Triangular muck pile: a ramp of slope `slope` rising from `x_start` to the
/// full height at the draw-point wall, `depth()` metres further in.
struct MuckPile {
    double slope = deg2rad(30.0);
    double height = 0.68;
    double width = 0.4;
    double x_start = 0.0;
    std::uint64_t seed = 0;
    VoxelGrid grid;
    double mean_density = 0.0;  // total mass / total volume

    double depth() const;
    double x_end() const { return x_start + depth(); }
    double surface_height(double x) const;
    double slice_center(int i) const;
    double column_center(int j) const;
    int slice_of(double x) const;
};

double surface_height(const MuckPile& pile, double x);

MuckPile generate_pile(const PileConfig& config, std::uint64_t seed);

/// Pile with a fixed slope; soil sampled exactly as in generate_pile.
MuckPile make_pile(double slope, const PileShape& shape, const SoilRanges& soil, std::uint64_t seed);

/// Material mass (kg) of the pile between its start and `x`, integrating the
/// per-voxel density over the solid below the surface.
double mass_up_to(const MuckPile& pile, double x);

double total_mass(const MuckPile& pile);

}  // namespace muckload::pile
