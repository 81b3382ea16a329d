#pragma once

#include <optional>
#include <vector>

#include "aronsson/geometry.hpp"
#include "aronsson/grid.hpp"
#include "aronsson/profile.hpp"

namespace aronsson {

/// u(x) = m . x + f(d . x) with m = (b+a)/2, d = (b-a)/2.
class SingularSolution {
public:
    /// Throws LipschitzViolation when f.lip_bound() >= 1.
    SingularSolution(Segment seg, ProfilePtr f);

    /// Skips the Lipschitz re-check. Negative controls only.
    static SingularSolution unchecked(Segment seg, ProfilePtr f);

    const Segment& segment() const noexcept { return seg_; }
    const Profile& profile() const noexcept { return *f_; }
    const ProfilePtr& profile_ptr() const noexcept { return f_; }
    bool lipschitz_hypothesis_holds() const noexcept { return f_->lip_bound() < 1.0; }

    /// d . x
    double phase(const Vector& x) const;

    double eval_u(const Vector& x) const;
    /// m + f'(d.x)/2 (b - a); undefined on the kink locus.
    std::optional<Vector> eval_gradient(const Vector& x) const;
    /// f''(d.x)/4 (b-a) (x) (b-a); undefined wherever f'' is.
    std::optional<Matrix> eval_hessian(const Vector& x) const;

    bool on_kink(const Vector& x) const;
    /// Whether a kink hyperplane lies within Euclidean distance `radius` of x.
    bool near_kink(const Vector& x, double radius) const;

private:
    struct Unchecked {};
    SingularSolution(Segment seg, ProfilePtr f, Unchecked);

    Segment seg_;
    ProfilePtr f_;
};

struct GradientRangeCertificate {
    double delta = 0.0;               ///< (1 - lip) / 2
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    double worst_line_residual = 0.0;
    double worst_lambda_mismatch = 0.0; ///< |lambda - (1/2 - f'/2)|
    std::size_t sample_count = 0;
    std::size_t skipped_kinks = 0;
    bool passed = false;
};

GradientRangeCertificate gradient_range_certificate(const SingularSolution& sol, const Grid& grid);

/// The hyperplane {x : d . x = level}.
struct KinkHyperplane {
    double level;
};

/// Kink hyperplanes of the solution that meet the grid's bounding box.
std::vector<KinkHyperplane> kink_locus(const SingularSolution& sol, const Grid& grid);

/// Point of the hyperplane {d.x = level} closest to `anchor`.
Vector point_on_kink(const SingularSolution& sol, double level, const Vector& anchor);

} // namespace aronsson
