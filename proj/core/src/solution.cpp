#include "aronsson/solution.hpp"

#include <algorithm>
#include <cmath>

#include "aronsson/errors.hpp"

namespace aronsson {

SingularSolution::SingularSolution(Segment seg, ProfilePtr f)
    : SingularSolution(std::move(seg), std::move(f), Unchecked{}) {
    if (!(f_->lip_bound() < 1.0)) throw LipschitzViolation(f_->lip_bound());
}

SingularSolution::SingularSolution(Segment seg, ProfilePtr f, Unchecked)
    : seg_(std::move(seg)), f_(std::move(f)) {
    if (!f_) throw InvalidArgument("solution needs a profile");
}

SingularSolution SingularSolution::unchecked(Segment seg, ProfilePtr f) {
    return SingularSolution(std::move(seg), std::move(f), Unchecked{});
}

double SingularSolution::phase(const Vector& x) const {
    require_same_dimension("solution point", seg_.dimension(), x.size());
    return seg_.half_difference().dot(x);
}

double SingularSolution::eval_u(const Vector& x) const {
    return seg_.midpoint().dot(x) + f_->value(phase(x));
}

std::optional<Vector> SingularSolution::eval_gradient(const Vector& x) const {
    const auto fp = f_->derivative(phase(x));
    if (!fp) return std::nullopt;
    return seg_.midpoint() + (0.5 * *fp) * seg_.direction();
}

std::optional<Matrix> SingularSolution::eval_hessian(const Vector& x) const {
    const auto fpp = f_->second_derivative(phase(x));
    if (!fpp) return std::nullopt;
    return (0.25 * *fpp) * Matrix::outer(seg_.direction(), seg_.direction());
}

bool SingularSolution::on_kink(const Vector& x) const { return f_->is_kink(phase(x)); }

bool SingularSolution::near_kink(const Vector& x, double radius) const {
    // |d.x - t_k| / |d| is the distance to the hyperplane {d.y = t_k}.
    const double t = phase(x);
    const double reach = radius * seg_.half_difference().norm();
    return !f_->kinks(t - reach, t + reach).empty();
}

GradientRangeCertificate gradient_range_certificate(const SingularSolution& sol, const Grid& grid) {
    require_same_dimension("gradient range grid", sol.segment().dimension(), grid.dimension());
    GradientRangeCertificate cert;
    cert.delta = 0.5 * (1.0 - sol.profile().lip_bound());
    cert.lambda_min = INFINITY;
    cert.lambda_max = -INFINITY;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const Vector x = grid.point(i);
        const auto du = sol.eval_gradient(x);
        if (!du) {
            ++cert.skipped_kinks;
            continue;
        }
        const auto cc = convex_coordinate(*du, sol.segment());
        const double expected = 0.5 - 0.5 * *sol.profile().derivative(sol.phase(x));
        cert.lambda_min = std::min(cert.lambda_min, cc.lambda);
        cert.lambda_max = std::max(cert.lambda_max, cc.lambda);
        cert.worst_line_residual = std::max(cert.worst_line_residual, cc.line_residual);
        cert.worst_lambda_mismatch =
            std::max(cert.worst_lambda_mismatch, std::abs(cc.lambda - expected));
        ++cert.sample_count;
    }
    cert.passed = cert.sample_count > 0 && cert.delta > 0.0 &&
                  cert.lambda_min >= cert.delta - 1e-12 &&
                  cert.lambda_max <= 1.0 - cert.delta + 1e-12 &&
                  cert.worst_line_residual <= 1e-10 && cert.worst_lambda_mismatch <= 1e-12;
    return cert;
}

std::vector<KinkHyperplane> kink_locus(const SingularSolution& sol, const Grid& grid) {
    const auto [lo, hi] = grid.projected_range(sol.segment().half_difference());
    std::vector<KinkHyperplane> out;
    for (double k : sol.profile().kinks(lo, hi)) out.push_back({k});
    return out;
}

Vector point_on_kink(const SingularSolution& sol, double level, const Vector& anchor) {
    const Vector& d = sol.segment().half_difference();
    return anchor + ((level - d.dot(anchor)) / d.squared_norm()) * d;
}

} // namespace aronsson
