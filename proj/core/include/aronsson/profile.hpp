#pragma once

#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace aronsson {

enum class Smoothness {
    C2,              ///< f'' defined everywhere
    Lipschitz,       ///< piecewise smooth, f' jumps at declared kinks
    TruncatedSeries, ///< f' is exact but f'' is not trusted
};

std::string_view to_string(Smoothness s);

/// Points closer than this to a declared kink are treated as the kink.
inline constexpr double kKinkTolerance = 1e-12;

/// Whether construction enforces lip_bound < 1. Only negative controls relax it.
enum class LipschitzPolicy { Enforce, AllowViolation };

/// Scalar profile f with |f'| <= lip_bound < 1 (unless built with
/// LipschitzPolicy::AllowViolation).
class Profile {
public:
    virtual ~Profile() = default;

    virtual double value(double t) const = 0;
    /// Undefined exactly at declared kinks.
    virtual std::optional<double> derivative(double t) const = 0;
    /// Undefined at kinks and for truncated-series profiles.
    virtual std::optional<double> second_derivative(double t) const = 0;
    /// (f'(t-), f'(t+)).
    virtual std::pair<double, double> one_sided_derivatives(double t) const;
    virtual double lip_bound() const = 0;
    /// Declared kinks in the closed interval [lo, hi], ascending.
    virtual std::vector<double> kinks(double lo, double hi) const = 0;
    virtual Smoothness smoothness() const = 0;
    virtual std::string_view kind() const = 0;
    virtual nlohmann::ordered_json describe() const = 0;

    bool is_kink(double t) const;
};

using ProfilePtr = std::shared_ptr<const Profile>;

/// kappa |t| on [-1, 1], extended 2-periodically. Kinks at every integer.
ProfilePtr make_sawtooth(double amplitude, LipschitzPolicy policy = LipschitzPolicy::Enforce);

/// kappa sin t.
ProfilePtr make_scaled_sine(double amplitude, LipschitzPolicy policy = LipschitzPolicy::Enforce);

/// Continuous piecewise-linear profile with f(0) = 0. `slopes` has one more
/// entry than `breakpoints`; slope i applies left of breakpoint i.
ProfilePtr make_piecewise_linear(std::vector<double> breakpoints, std::vector<double> slopes,
                                 LipschitzPolicy policy = LipschitzPolicy::Enforce);

/// f == 0.
ProfilePtr make_zero_profile();

/// Weierstrass-type surrogate for a nowhere-differentiable derivative:
///
///   f(t) = 1/(2M) sum_{k=0}^{N} alpha^k sin(nu^k pi t) / (nu^k pi),
///   M    = sum_{k=0}^{N} alpha^k,
///
/// the exact antiderivative of K_N(t)/2 with K_N(t) = (1/M) sum alpha^k cos(nu^k pi t).
/// Requires alpha in (0,1), nu odd >= 3, alpha nu > 1. Tagged TruncatedSeries.
ProfilePtr make_weierstrass_primitive(double alpha = 0.5, int nu = 3, int terms = 16);

/// max |f(t) - g(t)| over `samples` equispaced points of [lo, hi].
double sup_distance(const Profile& f, const Profile& g, double lo, double hi,
                    std::size_t samples);

/// Sampled Lipschitz constant: max |f'| over the samples where it is defined,
/// and the symmetric difference quotient across each kink in [lo, hi].
/// Throws CertificateMismatch when it exceeds lip_bound + 1e-12.
double certify_lip(const Profile& f, double lo, double hi, std::size_t samples);

} // namespace aronsson
