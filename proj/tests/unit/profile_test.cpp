#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "aronsson/errors.hpp"
#include "aronsson/profile.hpp"
#include "oracles.hpp"

using namespace aronsson;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<ProfilePtr> builtins() {
    return {make_sawtooth(0.5), make_scaled_sine(0.5), make_scaled_sine(0.9),
            make_piecewise_linear({-0.7, 0.3}, {0.2, -0.6, 0.45}), make_zero_profile(),
            make_weierstrass_primitive()};
}

} // namespace

TEST(ProfileTest, LipschitzBoundOfOneIsRejected) {
    EXPECT_THROW(make_piecewise_linear({}, {1.0}), LipschitzViolation);
    EXPECT_THROW(make_sawtooth(1.0), LipschitzViolation);
    EXPECT_THROW(make_scaled_sine(-1.2), LipschitzViolation);
    EXPECT_THROW(make_piecewise_linear({0.0}, {0.5, -1.0}), LipschitzViolation);
    EXPECT_NO_THROW(make_piecewise_linear({}, {1.0}, LipschitzPolicy::AllowViolation));
}

TEST(ProfileTest, PiecewiseLinearShapeIsValidated) {
    EXPECT_THROW(make_piecewise_linear({0.0}, {0.5}), InvalidArgument);
    EXPECT_THROW(make_piecewise_linear({0.3, 0.1}, {0.1, 0.2, 0.3}), InvalidArgument);
}

TEST(SawtoothTest, ValuesAndPeriodicity) {
    const auto f = make_sawtooth(0.5);
    EXPECT_DOUBLE_EQ(f->value(3.0), 0.5);
    EXPECT_DOUBLE_EQ(f->value(0.0), 0.0);
    EXPECT_DOUBLE_EQ(f->value(-0.5), 0.25);
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> t(-50.0, 50.0);
    for (int i = 0; i < 500; ++i) {
        const double x = t(rng);
        EXPECT_NEAR(f->value(x + 2.0), f->value(x), 1e-12);
        EXPECT_NEAR(f->value(x), oracle::sawtooth(0.5, x), 1e-12);
    }
}

TEST(SawtoothTest, DerivativeUndefinedExactlyAtIntegers) {
    const auto f = make_sawtooth(0.5);
    for (int k = -4; k <= 4; ++k) {
        EXPECT_FALSE(f->derivative(k).has_value());
        EXPECT_FALSE(f->second_derivative(k).has_value());
        EXPECT_TRUE(f->is_kink(k));
    }
    EXPECT_DOUBLE_EQ(*f->derivative(0.5), 0.5);
    EXPECT_DOUBLE_EQ(*f->derivative(-0.5), -0.5);
    EXPECT_DOUBLE_EQ(*f->derivative(1.5), -0.5);
    EXPECT_DOUBLE_EQ(*f->second_derivative(0.5), 0.0);
    const auto [left0, right0] = f->one_sided_derivatives(0.0);
    EXPECT_DOUBLE_EQ(left0, -0.5);
    EXPECT_DOUBLE_EQ(right0, 0.5);
    const auto [left1, right1] = f->one_sided_derivatives(1.0);
    EXPECT_DOUBLE_EQ(left1, 0.5);
    EXPECT_DOUBLE_EQ(right1, -0.5);
}

TEST(SawtoothTest, KinksInClosedInterval) {
    const auto f = make_sawtooth(0.5);
    EXPECT_EQ(f->kinks(-2.5, 2.5), (std::vector<double>{-2.0, -1.0, 0.0, 1.0, 2.0}));
    EXPECT_EQ(f->kinks(0.1, 0.9), std::vector<double>{});
    EXPECT_FALSE(std::signbit(f->kinks(-0.5, 0.5).at(0)));
}

TEST(PiecewiseLinearTest, AnchoredAtOriginWithDeclaredSlopes) {
    const auto f = make_piecewise_linear({-1.0, 2.0}, {0.5, -0.25, 0.75});
    EXPECT_DOUBLE_EQ(f->value(0.0), 0.0);
    EXPECT_DOUBLE_EQ(f->value(1.0), -0.25);
    EXPECT_DOUBLE_EQ(f->value(3.0), -0.5 + 0.75);
    EXPECT_DOUBLE_EQ(f->value(-2.0), 0.25 - 0.5);
    EXPECT_EQ(f->kinks(-5.0, 5.0), (std::vector<double>{-1.0, 2.0}));
    EXPECT_FALSE(f->derivative(2.0).has_value());
    EXPECT_DOUBLE_EQ(*f->derivative(2.5), 0.75);
    EXPECT_DOUBLE_EQ(f->lip_bound(), 0.75);
}

TEST(ScaledSineTest, ClosedForms) {
    const auto f = make_scaled_sine(0.5);
    for (double t : {-2.0, -0.3, 0.0, 1.1, 4.0}) {
        EXPECT_DOUBLE_EQ(f->value(t), 0.5 * std::sin(t));
        EXPECT_DOUBLE_EQ(*f->derivative(t), 0.5 * std::cos(t));
        EXPECT_DOUBLE_EQ(*f->second_derivative(t), -0.5 * std::sin(t));
    }
    EXPECT_TRUE(f->kinks(-100.0, 100.0).empty());
    EXPECT_EQ(f->smoothness(), Smoothness::C2);
}

TEST(WeierstrassTest, DerivativeMatchesIndependentCosineSeries) {
    const auto f = make_weierstrass_primitive(0.5, 3, 16);
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> t(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const double x = t(rng);
        EXPECT_NEAR(*f->derivative(x), oracle::weierstrass_derivative(0.5, 3, 16, x), 1e-12);
    }
    EXPECT_NEAR(*f->derivative(0.0), 0.5, 1e-12);
    EXPECT_FALSE(f->second_derivative(0.3).has_value());
    EXPECT_EQ(f->smoothness(), Smoothness::TruncatedSeries);
    EXPECT_DOUBLE_EQ(f->value(0.0), 0.0);
}

TEST(WeierstrassTest, ValueIsAnAntiderivative) {
    // Few terms keep the central difference accurate.
    const auto f = make_weierstrass_primitive(0.5, 3, 3);
    const double h = 1e-5;
    for (double t = -1.0; t <= 1.0; t += 0.0625) {
        const double fd = (f->value(t + h) - f->value(t - h)) / (2.0 * h);
        EXPECT_NEAR(fd, oracle::weierstrass_derivative(0.5, 3, 3, t), 1e-6);
    }
}

TEST(WeierstrassTest, RejectsBadParameters) {
    EXPECT_THROW(make_weierstrass_primitive(1.0, 3, 16), InvalidArgument);
    EXPECT_THROW(make_weierstrass_primitive(0.5, 4, 16), InvalidArgument);
    EXPECT_THROW(make_weierstrass_primitive(0.2, 3, 16), InvalidArgument);
}

TEST(ProfileTest, LipschitzContinuityOnRandomPairs) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> t(-5.0, 5.0);
    for (const auto& f : builtins()) {
        for (int i = 0; i < 1000; ++i) {
            const double x = t(rng);
            const double y = t(rng);
            EXPECT_LE(std::abs(f->value(x) - f->value(y)), f->lip_bound() * std::abs(x - y) + 1e-12)
                << f->kind();
        }
    }
}

TEST(CertifyLipTest, Examples) {
    EXPECT_NEAR(certify_lip(*make_sawtooth(0.5), -3.0, 3.0, 4001), 0.5, 1e-12);
    EXPECT_NEAR(certify_lip(*make_scaled_sine(0.9), -1.0, 1.0, 4001), 0.9, 1e-15);
    const double w = certify_lip(*make_weierstrass_primitive(), -1.0, 1.0, 4001);
    EXPECT_LE(w, 0.5);
    EXPECT_NEAR(w, 0.5, 1e-12);
}

TEST(CertifyLipTest, NeverExceedsBruteForceDerivativeMaximumOnSmoothProfiles) {
    for (const auto& f : {make_scaled_sine(0.7), make_weierstrass_primitive(0.5, 3, 4)}) {
        const double brute = oracle::max_abs_on([&](double t) { return *f->derivative(t); }, -2.0, 2.0, 40001);
        const double cert = certify_lip(*f, -2.0, 2.0, 40001);
        EXPECT_NEAR(cert, brute, 1e-12);
    }
}

TEST(SupDistanceTest, Examples) {
    const auto f = make_scaled_sine(0.5);
    EXPECT_EQ(sup_distance(*f, *f, -3.0, 3.0, 1001), 0.0);
    EXPECT_NEAR(sup_distance(*f, *make_scaled_sine(0.25), 0.0, 2.0 * kPi, 4001), 0.25, 1e-12);
}
