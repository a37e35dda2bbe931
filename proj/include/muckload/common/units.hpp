#pragma once

#include <numbers>

namespace muckload {

inline constexpr double kGravity = 9.81;
inline constexpr double kPi = std::numbers::pi;

constexpr double deg2rad(double deg) { return deg * kPi / 180.0; }
constexpr double rad2deg(double rad) { return rad * 180.0 / kPi; }

}  // namespace muckload
