#pragma once

#include <json.hpp>

#include "muckload/pile/muck_pile.hpp"

namespace muckload::pile {

/// Snapshot with slope, dimensions, seed and per-voxel parameter arrays.
nlohmann::json to_json(const MuckPile& pile);
MuckPile pile_from_json(const nlohmann::json& doc);

/// Surface polyline (x, z) sampled at slice boundaries, for rendering.
nlohmann::json surface_profile_json(const MuckPile& pile);

}  // namespace muckload::pile
