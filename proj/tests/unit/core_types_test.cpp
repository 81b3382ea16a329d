#include <gtest/gtest.h>

#include <cmath>

#include "aronsson/errors.hpp"
#include "aronsson/geometry.hpp"
#include "aronsson/grid.hpp"
#include "aronsson/linalg.hpp"
#include "aronsson/tolerances.hpp"
#include "oracles.hpp"

using namespace aronsson;

namespace {

Vector to_vector(const oracle::Point& p) { return Vector(std::vector<double>(p)); }

oracle::Point to_point(const Vector& v) { return {v.coords().begin(), v.coords().end()}; }

} // namespace

TEST(VectorTest, RejectsScalarsAndNonFiniteEntries) {
    EXPECT_THROW(Vector({1.0}), InvalidArgument);
    EXPECT_THROW(Vector(std::vector<double>{}), InvalidArgument);
    EXPECT_THROW(Vector({1.0, std::nan("")}), InvalidArgument);
    EXPECT_THROW(Vector({1.0, INFINITY}), InvalidArgument);
}

TEST(VectorTest, ArithmeticAndNorms) {
    const Vector a{3.0, 4.0};
    const Vector b{1.0, -2.0};
    EXPECT_DOUBLE_EQ(a.norm(), 5.0);
    EXPECT_DOUBLE_EQ(a.dot(b), -5.0);
    EXPECT_EQ(a + b, (Vector{4.0, 2.0}));
    EXPECT_EQ(a - b, (Vector{2.0, 6.0}));
    EXPECT_EQ(2.0 * b, (Vector{2.0, -4.0}));
    EXPECT_EQ(Vector::unit(3, 1), (Vector{0.0, 1.0, 0.0}));
}

TEST(VectorTest, MixedDimensionsAreRejected) {
    const Vector a{1.0, 2.0};
    const Vector b{1.0, 2.0, 3.0};
    EXPECT_THROW(a.dot(b), DimensionMismatch);
    EXPECT_THROW(a + b, DimensionMismatch);
}

TEST(MatrixTest, OuterProductAndQuadraticForm) {
    const Matrix m = Matrix::outer(Vector{1.0, 2.0}, Vector{3.0, -1.0});
    EXPECT_DOUBLE_EQ(m(0, 0), 3.0);
    EXPECT_DOUBLE_EQ(m(1, 1), -2.0);
    EXPECT_DOUBLE_EQ(m.quadratic_form(Vector{1.0, 1.0}), 3.0 - 1.0 + 6.0 - 2.0);
    EXPECT_EQ(m.apply(Vector{0.0, 1.0}), (Vector{-1.0, -2.0}));
}

TEST(SegmentTest, DegenerateSegmentIsAHypothesisViolation) {
    EXPECT_THROW(Segment(Vector{0.5, 0.5}, Vector{0.5, 0.5}), DegenerateSegment);
    try {
        Segment(Vector{1.0, 1.0}, Vector{1.0, 1.0});
        FAIL();
    } catch (const HypothesisViolation&) {
    }
}

TEST(SegmentTest, DerivedQuantities) {
    const Segment s(Vector{-1.0, 0.0}, Vector{3.0, 2.0});
    EXPECT_EQ(s.midpoint(), (Vector{1.0, 1.0}));
    EXPECT_EQ(s.half_difference(), (Vector{2.0, 1.0}));
    EXPECT_EQ(s.direction(), (Vector{4.0, 2.0}));
    EXPECT_EQ(s.point_at(1.0), s.b());
    EXPECT_EQ(s.point_at(0.0), s.a());
    EXPECT_THROW(Segment(Vector{0.0, 0.0}, Vector{1.0, 0.0, 0.0}), DimensionMismatch);
}

TEST(ConvexCoordinateTest, Examples) {
    const Segment s(Vector{-1.0, 0.0}, Vector{1.0, 0.0});
    auto at_a = convex_coordinate(s.a(), s);
    EXPECT_DOUBLE_EQ(at_a.lambda, 1.0);
    EXPECT_DOUBLE_EQ(at_a.line_residual, 0.0);
    EXPECT_DOUBLE_EQ(convex_coordinate(s.midpoint(), s).lambda, 0.5);
    auto q = convex_coordinate(Vector{0.5, 0.0}, s);
    EXPECT_DOUBLE_EQ(q.lambda, 0.25);
    EXPECT_DOUBLE_EQ(q.line_residual, 0.0);
    auto off = convex_coordinate(Vector{0.0, 2.0}, s);
    EXPECT_DOUBLE_EQ(off.lambda, 0.5);
    EXPECT_DOUBLE_EQ(off.line_residual, 2.0);
}

TEST(ProjectionTest, Examples) {
    const Segment s(Vector{0.0, 0.0}, Vector{1.0, 0.0});
    auto above = project_to_segment(Vector{0.0, 1.0}, s);
    EXPECT_EQ(above.point, (Vector{0.0, 0.0}));
    EXPECT_DOUBLE_EQ(above.distance, 1.0);
    auto beyond = project_to_segment(Vector{2.0, 0.0}, s);
    EXPECT_EQ(beyond.point, (Vector{1.0, 0.0}));
    EXPECT_DOUBLE_EQ(beyond.distance, 1.0);
}

TEST(ProjectionTest, AgreesWithDenseScan) {
    const auto ends = oracle::random_points(40, 3, -2.0, 2.0, 11);
    const auto queries = oracle::random_points(40, 3, -3.0, 3.0, 12);
    for (std::size_t i = 0; i + 1 < ends.size(); i += 2) {
        const Segment s(to_vector(ends[i]), to_vector(ends[i + 1]));
        for (const auto& q : queries) {
            const auto got = project_to_segment(to_vector(q), s);
            const auto ref = oracle::scan_projection(q, ends[i], ends[i + 1]);
            EXPECT_NEAR(got.distance, ref.distance, 1e-9);
            EXPECT_NEAR(oracle::distance(to_point(got.point), oracle::lerp(ends[i], ends[i + 1], ref.lambda)),
                        0.0, 1e-6);
        }
    }
}

TEST(ConvexCoordinateTest, ResidualMatchesReconstructionError) {
    const auto pts = oracle::random_points(300, 2, -3.0, 3.0, 21);
    const Segment s(Vector{-1.0, 0.5}, Vector{1.5, -0.5});
    for (const auto& p : pts) {
        const Vector q = to_vector(p);
        const auto cc = convex_coordinate(q, s);
        const Vector on_line = cc.lambda * s.a() + (1.0 - cc.lambda) * s.b();
        EXPECT_NEAR((q - on_line).norm(), cc.line_residual, 1e-12);
    }
}

TEST(ConvexCoordinateTest, ZeroDistanceExactlyForPointsOnTheSegment) {
    const Segment s(Vector{-1.0, 0.5, 2.0}, Vector{1.5, -0.5, 0.0});
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> lam(-0.5, 1.5);
    for (int i = 0; i < 200; ++i) {
        const double l = lam(rng);
        const Vector q = l * s.a() + (1.0 - l) * s.b();
        const auto cc = convex_coordinate(q, s);
        EXPECT_NEAR(cc.lambda, l, 1e-12);
        EXPECT_LE(cc.line_residual, 1e-12);
        const double dist = project_to_segment(q, s).distance;
        if (l >= 0.0 && l <= 1.0) EXPECT_LE(dist, 1e-12);
        else EXPECT_GT(dist, 1e-12);
    }
}

TEST(ConvexCoordinateTest, SwappingEndpointsComplementsLambda) {
    const Segment s(Vector{-1.0, 0.5}, Vector{1.5, -0.5});
    const Segment r = s.reversed();
    for (const auto& p : oracle::random_points(200, 2, -3.0, 3.0, 41)) {
        const Vector q = to_vector(p);
        const auto c1 = convex_coordinate(q, s);
        const auto c2 = convex_coordinate(q, r);
        EXPECT_NEAR(c1.lambda + c2.lambda, 1.0, 1e-12);
        EXPECT_NEAR(c1.line_residual, c2.line_residual, 1e-12);
    }
}

TEST(GridTest, RowMajorLayoutWithLastAxisFastest) {
    const Grid g(Vector{0.0, 1.0}, {1.0, 2.0}, {3, 5});
    EXPECT_EQ(g.size(), 15u);
    EXPECT_EQ(g.point(0), (Vector{-1.0, -1.0}));
    EXPECT_EQ(g.point(1), (Vector{-1.0, 0.0}));
    EXPECT_EQ(g.point(5), (Vector{0.0, -1.0}));
    EXPECT_EQ(g.point(14), (Vector{1.0, 3.0}));
    EXPECT_EQ(g.lower_corner(), (Vector{-1.0, -1.0}));
    EXPECT_EQ(g.upper_corner(), (Vector{1.0, 3.0}));
    const auto all = g.points();
    ASSERT_EQ(all.size(), 15u);
    EXPECT_EQ(all[7], g.point(7));
}

TEST(GridTest, ProjectedRangeCoversEveryPoint) {
    const Grid g(Vector{0.5, -0.5}, {2.0, 1.0}, {7, 9});
    const Vector v{0.3, -1.1};
    const auto [lo, hi] = g.projected_range(v);
    double seen_lo = INFINITY;
    double seen_hi = -INFINITY;
    for (const auto& x : g.points()) {
        seen_lo = std::min(seen_lo, v.dot(x));
        seen_hi = std::max(seen_hi, v.dot(x));
    }
    EXPECT_NEAR(lo, seen_lo, 1e-12);
    EXPECT_NEAR(hi, seen_hi, 1e-12);
}

TEST(GridTest, RejectsBadShapes) {
    EXPECT_THROW(Grid(Vector{0.0, 0.0}, {1.0, 1.0}, {1, 5}), InvalidArgument);
    EXPECT_THROW(Grid(Vector{0.0, 0.0}, {1.0}, {5, 5}), DimensionMismatch);
    EXPECT_THROW(Grid(Vector{0.0, 0.0}, {-1.0, 1.0}, {5, 5}), InvalidArgument);
}

TEST(TolerancesTest, DefaultsAreValidAndNegativesAreNot) {
    Tolerances t;
    EXPECT_NO_THROW(t.validate());
    EXPECT_DOUBLE_EQ(t.exact_zero, 1e-10);
    EXPECT_DOUBLE_EQ(t.fd_rel, 1e-6);
    t.flatness = -1.0;
    EXPECT_THROW(t.validate(), InvalidArgument);
}
