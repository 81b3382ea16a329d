#include "aronsson/geometry.hpp"

#include <algorithm>

#include "aronsson/errors.hpp"

namespace aronsson {

Segment::Segment(Vector a, Vector b)
    : a_(std::move(a)), b_(std::move(b)), midpoint_(0.5 * (b_ + a_)),
      half_difference_(0.5 * (b_ - a_)), direction_(b_ - a_), length_(direction_.norm()) {
    if (length_ == 0.0) throw DegenerateSegment();
}

Vector Segment::point_at(double t) const { return t * b_ + (1.0 - t) * a_; }

ConvexCoordinate convex_coordinate(const Vector& q, const Segment& seg) {
    require_same_dimension("convex_coordinate", seg.dimension(), q.size());
    // q ~ b + lambda (a - b)
    const Vector a_minus_b = seg.a() - seg.b();
    const Vector rel = q - seg.b();
    const double lambda = rel.dot(a_minus_b) / a_minus_b.squared_norm();
    const double residual = (rel - lambda * a_minus_b).norm();
    return {lambda, residual};
}

SegmentProjection project_to_segment(const Vector& q, const Segment& seg) {
    const double lambda = std::clamp(convex_coordinate(q, seg).lambda, 0.0, 1.0);
    Vector proj = lambda * seg.a() + (1.0 - lambda) * seg.b();
    const double dist = (q - proj).norm();
    return {std::move(proj), dist};
}

} // namespace aronsson
