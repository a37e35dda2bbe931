#pragma once

#include "muckload/pile/muck_pile.hpp"

namespace muckload::pile {

struct ZoneConfig {
    double mass_min = 65.0;   // kg of material before the end zone starts
    double mass_max = 170.0;  // kg of material before the end zone ends
    double z_min = 0.35;      // m, end-zone floor
    double d_cutoff = 0.15;   // m, permitted depth stops this far before the wall

    void validate() const;
};

/// End / permitted / restricted regions of the XZ plane for one pile.
struct Zones {
    double x_min = 0.0;
    double x_max = 0.0;
    double z_min = 0.35;
    double depth_limit = 0.0;  // furthest permitted x

    bool in_end_zone(double x, double z) const;
    bool in_restricted(double x, double z) const;
    bool in_permitted(double x, double z) const;
};

/// Solves the cumulative-mass equations for x_min and x_max.
/// Throws GeometryError when the pile holds less than mass_max or the end
/// zone would reach past the permitted depth.
Zones compute_zones(const MuckPile& pile, const ZoneConfig& config = {});

}  // namespace muckload::pile
