#pragma once

namespace muckload {

/// Point in the pile's XZ plane.
struct Point2 {
    double x = 0.0;
    double z = 0.0;
};

/// Bucket tip pose in the pile frame {M}; pitch is positive when curled back.
struct TipPose {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
    double pitch = 0.0;
};

struct Force3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

}  // namespace muckload
