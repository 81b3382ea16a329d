#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "aronsson/errors.hpp"
#include "aronsson/mollifier.hpp"
#include "aronsson/verify/residuals.hpp"
#include "oracles.hpp"

using namespace aronsson;
using namespace aronsson::verify;

namespace {

constexpr double kPi = std::numbers::pi;
const Segment kHorizontal(Vector{-1.0, 0.0}, Vector{1.0, 0.0});
const Segment kTilted(Vector{-1.0, 0.5}, Vector{1.5, -0.5});

Vector to_vector(const oracle::Point& p) { return Vector(std::vector<double>(p)); }

// Hand evaluation of (1/4) f''(t) beta^2 for H = |p|^2/2, f = k sin, seg = [(-1,0),(1,0)].
double quadratic_sine_residual(double kappa, double t) {
    const double du1 = kappa * std::cos(t); // m = 0, (b-a)/2 = (1,0)
    const double beta = 2.0 * du1;
    const double fpp = -kappa * std::sin(t);
    return 0.25 * fpp * beta * beta;
}

std::vector<Vector> clear_points(const SingularSolution& sol, std::size_t count, double radius,
                                 std::uint64_t seed) {
    std::vector<Vector> out;
    for (const auto& p : oracle::random_points(4 * count, 2, -3.0, 3.0, seed)) {
        Vector x = to_vector(p);
        if (!sol.near_kink(x, radius)) out.push_back(std::move(x));
        if (out.size() == count) break;
    }
    return out;
}

} // namespace

TEST(PerpendicularityTest, Examples) {
    const SingularSolution sine(kTilted, make_scaled_sine(0.5));
    const auto segdist = make_seg_dist_sq(kTilted);
    EXPECT_LE(*perpendicularity_residual(*segdist, sine, Vector{0.3, 1.0}), 1e-15);
    const SingularSolution hsine(kHorizontal, make_scaled_sine(0.5));
    const auto lin = make_linear_orthogonal(kHorizontal, Vector{0.0, 1.0});
    EXPECT_EQ(*perpendicularity_residual(*lin, hsine, Vector{-2.0, 1.0}), 0.0);
    // without flatness the residual is |(b-a).Du| = 2 |Du_1|
    EXPECT_NEAR(*perpendicularity_residual(*make_quadratic(), hsine, Vector{0.0, 0.0}), 1.0, 1e-15);
    const SingularSolution saw(kHorizontal, make_sawtooth(0.5));
    EXPECT_FALSE(perpendicularity_residual(*lin, saw, Vector{1.0, 0.0}).has_value());
}

TEST(EikonalTest, LevelIsTheValueAtTheMidpoint) {
    const auto H = make_sum({make_seg_dist_sq(kTilted), make_linear_orthogonal(kTilted, Vector{0.4, 1.0}, 0.7)});
    const double c = H->value(kTilted.midpoint());
    const SingularSolution sol(kTilted, make_scaled_sine(0.9));
    for (const auto& p : oracle::random_points(100, 2, -3.0, 3.0, 4)) {
        EXPECT_LE(*eikonal_residual(*H, sol, to_vector(p), c), 1e-14);
    }
    const SingularSolution hsine(kHorizontal, make_scaled_sine(0.5));
    EXPECT_NEAR(*eikonal_residual(*make_quadratic(), hsine, Vector{0.0, 0.0}, 0.0), 0.125, 1e-15);
}

TEST(AronssonAnalyticTest, LinearOrthogonalCancelsExactly) {
    const SingularSolution sol(kHorizontal, make_scaled_sine(0.5));
    const auto H = make_linear_orthogonal(kHorizontal, Vector{0.0, 1.0});
    for (const auto& p : oracle::random_points(100, 2, -3.0, 3.0, 6)) {
        const auto e = aronsson_analytic(*H, sol, to_vector(p));
        EXPECT_EQ(*e.beta, 0.0);
        EXPECT_EQ(*e.residual_analytic, 0.0);
        EXPECT_DOUBLE_EQ(*e.fpp, -0.5 * std::sin(p[0]));
    }
}

TEST(AronssonAnalyticTest, QuadraticControlExamples) {
    const SingularSolution sol(kHorizontal, make_scaled_sine(0.5));
    const auto H = make_quadratic();
    const auto origin = aronsson_analytic(*H, sol, Vector{0.0, 0.0});
    EXPECT_DOUBLE_EQ(*origin.beta, 1.0);
    EXPECT_EQ(*origin.fpp, -0.0);
    EXPECT_EQ(*origin.residual_analytic, 0.0);

    const auto top = aronsson_analytic(*H, sol, Vector{kPi / 2.0, 0.0});
    EXPECT_NEAR(*top.beta, 0.0, 1e-16);
    EXPECT_NEAR(*top.residual_analytic, 0.0, 1e-16);

    const auto mid = aronsson_analytic(*H, sol, Vector{kPi / 4.0, 0.0});
    EXPECT_NEAR(*mid.beta, std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(*mid.fpp, -0.5 * std::sqrt(0.5), 1e-15);
    EXPECT_NEAR(*mid.residual_analytic, quadratic_sine_residual(0.5, kPi / 4.0), 1e-15);
    EXPECT_NEAR(*mid.residual_analytic, -0.044194, 1e-4);
}

TEST(AronssonAnalyticTest, ZeroProfileSolvesForAnyHamiltonian) {
    const SingularSolution sol(kTilted, make_zero_profile());
    for (const auto& H : {make_quadratic(), make_seg_dist_sq(kTilted)}) {
        for (const auto& p : oracle::random_points(20, 2, -3.0, 3.0, 10)) {
            EXPECT_EQ(*aronsson_analytic(*H, sol, to_vector(p)).residual_analytic, 0.0);
        }
    }
}

TEST(AronssonAnalyticTest, UndefinedAtKinksAndForTruncatedSeries) {
    const auto H = make_linear_orthogonal(kHorizontal, Vector{0.0, 1.0});
    const auto at_kink = aronsson_analytic(*H, SingularSolution(kHorizontal, make_sawtooth(0.5)), Vector{1.0, 0.3});
    EXPECT_FALSE(at_kink.beta.has_value());
    EXPECT_FALSE(at_kink.residual_analytic.has_value());
    const auto weier = aronsson_analytic(*H, SingularSolution(kHorizontal, make_weierstrass_primitive()), Vector{0.2, 0.3});
    EXPECT_EQ(*weier.beta, 0.0);
    EXPECT_FALSE(weier.residual_analytic.has_value());
}

TEST(AronssonFdTest, PolynomialFieldAgainstHandDerivatives) {
    // u = x1^2 x2 + x2^3 / 3, H = |p|^2 / 2
    const ScalarField u = [](const Vector& x) { return x[0] * x[0] * x[1] + x[1] * x[1] * x[1] / 3.0; };
    for (const auto& p : oracle::random_points(50, 2, -2.0, 2.0, 12)) {
        const double x1 = p[0];
        const double x2 = p[1];
        const double g1 = 2.0 * x1 * x2;
        const double g2 = x1 * x1 + x2 * x2;
        const double expected = 2.0 * x2 * g1 * g1 + 4.0 * x1 * g1 * g2 + 2.0 * x2 * g2 * g2;
        EXPECT_NEAR(aronsson_fd(*make_quadratic(), u, to_vector(p), 1e-3), expected,
                    1e-5 * std::max(1.0, std::abs(expected)));
    }
}

TEST(AronssonFdTest, SawtoothLinearAwayFromKinks) {
    const SingularSolution sol(kHorizontal, make_sawtooth(0.5));
    const auto H = make_linear_orthogonal(kHorizontal, Vector{0.0, 1.0});
    for (const auto& x : clear_points(sol, 100, 1e-2, 14)) {
        EXPECT_LE(std::abs(aronsson_fd(*H, sol, x, 1e-3)), 1e-8);
    }
    EXPECT_THROW(aronsson_fd(*H, sol, Vector{1.0005, 0.0}, 1e-3), KinkProximity);
}

TEST(AronssonFdTest, QuadraticControlPointAndConvergence) {
    const SingularSolution sol(kHorizontal, make_scaled_sine(0.5));
    const auto H = make_quadratic();
    const Vector x{kPi / 4.0, 0.0};
    const double expected = quadratic_sine_residual(0.5, kPi / 4.0);
    EXPECT_NEAR(aronsson_fd(*H, sol, x, 1e-3), expected, 1e-4);
    EXPECT_NEAR(aronsson_fd(*H, sol, x, 1e-3), -0.04419, 1e-4);

    const auto study = fd_convergence(*H, sol, x, {1e-2, 5e-3, 2.5e-3});
    EXPECT_NEAR(study.analytic, expected, 1e-15);
    ASSERT_EQ(study.orders.size(), 2u);
    EXPECT_GE(study.min_order, 1.8);
    EXPECT_LE(study.min_order, 2.2);
    EXPECT_THROW(fd_convergence(*H, sol, x, {1e-2}), InvalidArgument);
}

TEST(AronssonFdTest, MatchesAnalyticOnFlatAndControlScenarios) {
    const SingularSolution sol(kTilted, make_scaled_sine(0.7));
    for (const auto& H : {make_seg_dist_sq(kTilted), make_quadratic(),
                          make_sum({make_seg_dist_sq(kTilted), make_linear_orthogonal(kTilted, Vector{0.4, 1.0})})}) {
        for (const auto& p : oracle::random_points(100, 2, -3.0, 3.0, 15)) {
            const Vector x = to_vector(p);
            const double analytic = *aronsson_analytic(*H, sol, x).residual_analytic;
            EXPECT_NEAR(aronsson_fd(*H, sol, x, 1e-3), analytic, 1e-5) << to_string(H->kind());
        }
    }
}

TEST(IdentityTest, FlatScenariosVanish) {
    const auto sol = SingularSolution(kTilted, mollify(make_sawtooth(0.5), Mollifier(0.1)));
    const auto H = make_sum({make_seg_dist_sq(kTilted), make_linear_orthogonal(kTilted, Vector{0.4, 1.0})});
    for (const auto& x : clear_points(sol, 50, 1e-3, 16)) {
        EXPECT_LE(identity_residual(*H, sol, x, 1e-4), 1e-8);
    }
}

TEST(IdentityTest, HoldsForTheQuadraticControl) {
    const SingularSolution sol(kHorizontal, make_scaled_sine(0.5));
    const auto H = make_quadratic();
    EXPECT_LE(identity_residual(*H, sol, Vector{kPi / 4.0, 0.0}, 1e-4), 1e-6);
    for (const auto& x : clear_points(sol, 100, 1e-3, 17)) {
        EXPECT_LE(identity_residual(*H, sol, x, 1e-4), 1e-6);
    }
}

TEST(IdentityTest, RejectsStencilsAcrossKinks) {
    const SingularSolution sol(kHorizontal, make_sawtooth(0.5));
    const auto H = make_linear_orthogonal(kHorizontal, Vector{0.0, 1.0});
    EXPECT_THROW(identity_residual(*H, sol, Vector{0.0001, 0.0}, 1e-4), KinkProximity);
    EXPECT_NEAR(identity_residual(*H, sol, Vector{0.5, 0.0}, 1e-4), 0.0, 1e-12);
}
