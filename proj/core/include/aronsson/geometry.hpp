#pragma once

#include "aronsson/linalg.hpp"

namespace aronsson {

/// Closed segment [a, b] with a != b. The midpoint (b+a)/2 and the
/// half-difference (b-a)/2 are derived once from the endpoints.
class Segment {
public:
    /// Throws DegenerateSegment when a == b, DimensionMismatch on size mismatch.
    Segment(Vector a, Vector b);

    const Vector& a() const noexcept { return a_; }
    const Vector& b() const noexcept { return b_; }
    const Vector& midpoint() const noexcept { return midpoint_; }
    const Vector& half_difference() const noexcept { return half_difference_; }
    /// b - a
    const Vector& direction() const noexcept { return direction_; }
    double length() const noexcept { return length_; }
    std::size_t dimension() const noexcept { return a_.size(); }

    /// t b + (1 - t) a
    Vector point_at(double t) const;

    Segment reversed() const { return Segment(b_, a_); }

private:
    Vector a_;
    Vector b_;
    Vector midpoint_;
    Vector half_difference_;
    Vector direction_;
    double length_;
};

struct ConvexCoordinate {
    double lambda;        ///< q ~ lambda a + (1 - lambda) b
    double line_residual; ///< distance from q to the line through a and b
};

/// Orthogonal projection of q onto the line through the segment, expressed
/// as the weight on a. Lambda is not clamped.
ConvexCoordinate convex_coordinate(const Vector& q, const Segment& seg);

struct SegmentProjection {
    Vector point;
    double distance;
};

/// Closest point of the closed segment to q.
SegmentProjection project_to_segment(const Vector& q, const Segment& seg);

} // namespace aronsson
