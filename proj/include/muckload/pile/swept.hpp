#pragma once

#include <span>
#include <vector>

#include "muckload/common/geometry.hpp"
#include "muckload/pile/muck_pile.hpp"

namespace muckload::pile {

/// Piecewise-linear surface z(x) held constant beyond its first and last knot.
class SurfaceProfile {
public:
    SurfaceProfile() = default;
    explicit SurfaceProfile(std::vector<Point2> knots);

    static SurfaceProfile of(const MuckPile& pile);

    double operator()(double x) const;
    const std::vector<Point2>& knots() const { return knots_; }

private:
    std::vector<Point2> knots_;
};

/// Lower envelope of a tip path over x. Retracing part of the path never
/// changes the envelope, so the swept region depends on the path's shape
/// only.
class SweptEnvelope {
public:
    struct Piece {
        double x0;
        double x1;
        double z0;
        double z1;
    };

    /// Extends the path to `p`.
    void add_point(Point2 p);
    void insert_segment(Point2 a, Point2 b);
    void clear();

    /// Exact area between the envelope (floored at ground level) and the
    /// surface wherever the surface lies above it.
    double area_below(const SurfaceProfile& surface) const;

    const std::vector<Piece>& pieces() const { return pieces_; }
    bool empty() const { return !has_last_; }

private:
    std::vector<Piece> pieces_;
    Point2 last_{};
    bool has_last_ = false;
};

inline constexpr double kLoadedFraction = 2.0 / 3.0;

double swept_area(std::span<const Point2> trajectory, const SurfaceProfile& surface);

/// Mass loaded by a tip path: the fraction of the material bounded by the
/// path and the pile surface, over the bucket width.
double swept_mass(std::span<const Point2> trajectory, const MuckPile& pile, double bucket_width,
                  double fraction = kLoadedFraction);

}  // namespace muckload::pile
