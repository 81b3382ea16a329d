#pragma once

#include <cstddef>

#include "aronsson/profile.hpp"

namespace aronsson {

/// Standard bump eta(s) = Z exp(1 / (s^2 - 1)) on |s| < 1, scaled to
/// eta_eps(y) = eta(y / eps) / eps.
class Mollifier {
public:
    explicit Mollifier(double epsilon);

    double epsilon() const noexcept { return epsilon_; }
    double operator()(double y) const;
    /// d/dy eta_eps(y)
    double derivative(double y) const;

    /// Normalization Z of the unit bump, computed once by panel doubling.
    static double normalization();

    /// Integral of eta_eps over [-eps, eps] by the composite rule with
    /// quad_points / 16 panels.
    double discrete_mass(std::size_t quad_points) const;

private:
    double epsilon_;
};

inline constexpr std::size_t kDefaultQuadPoints = 256;
inline constexpr double kMollifierMassTolerance = 1e-10;

/// f * eta_eps evaluated by composite Gauss-Legendre over [-eps, eps], split
/// at every kink of f inside the window. The discrete weights are divided by
/// their own mass, so affine profiles are reproduced and |(f^eps)'| never
/// exceeds lip_bound. The result is tagged C2 and inherits lip_bound.
/// Throws QuadratureFailure when the mass self-test misses 1 by > 1e-10,
/// InvalidArgument when quad_points < 32.
ProfilePtr mollify(ProfilePtr f, const Mollifier& m, std::size_t quad_points = kDefaultQuadPoints);

} // namespace aronsson
