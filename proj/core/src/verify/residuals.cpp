#include "aronsson/verify/residuals.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "aronsson/errors.hpp"

namespace aronsson::verify {

namespace {

void require_clear_of_kinks(const SingularSolution& sol, const Vector& x, double h) {
    if (sol.near_kink(x, 2.0 * h)) {
        throw KinkProximity("finite-difference stencil of step " + std::to_string(h) +
                            " would cross the kink locus");
    }
}

} // namespace

std::optional<double> perpendicularity_residual(const HamiltonianModel& H,
                                                const SingularSolution& sol, const Vector& x) {
    const auto du = sol.eval_gradient(x);
    if (!du) return std::nullopt;
    return std::abs(sol.segment().direction().dot(H.gradient(*du)));
}

std::optional<double> eikonal_residual(const HamiltonianModel& H, const SingularSolution& sol,
                                       const Vector& x, double level) {
    const auto du = sol.eval_gradient(x);
    if (!du) return std::nullopt;
    return std::abs(H.value(*du) - level);
}

AronssonEvaluation aronsson_analytic(const HamiltonianModel& H, const SingularSolution& sol,
                                     const Vector& x) {
    AronssonEvaluation eval{x};
    const auto du = sol.eval_gradient(x);
    if (!du) return eval;
    const double beta = sol.segment().direction().dot(H.gradient(*du));
    eval.beta = beta;
    eval.fpp = sol.profile().second_derivative(sol.phase(x));
    if (eval.fpp) eval.residual_analytic = 0.25 * *eval.fpp * beta * beta;
    return eval;
}

double aronsson_fd(const HamiltonianModel& H, const ScalarField& u, const Vector& x, double h) {
    const Vector du = fd_gradient(u, x, h);
    const Matrix d2u = fd_hessian(u, x, h);
    return d2u.quadratic_form(H.gradient(du));
}

double aronsson_fd(const HamiltonianModel& H, const SingularSolution& sol, const Vector& x,
                   double h) {
    require_clear_of_kinks(sol, x, h);
    return aronsson_fd(H, [&sol](const Vector& y) { return sol.eval_u(y); }, x, h);
}

double identity_residual(const HamiltonianModel& H, const SingularSolution& sol, const Vector& x,
                         double h) {
    require_clear_of_kinks(sol, x, h);
    const AronssonEvaluation eval = aronsson_analytic(H, sol, x);
    if (!eval.residual_analytic) {
        throw InvalidArgument("identity residual needs a twice differentiable profile at x");
    }
    const ScalarField level_field = [&](const Vector& y) {
        const auto du = sol.eval_gradient(y);
        if (!du) throw KinkProximity("gradient undefined inside the stencil");
        return H.value(*du);
    };
    const Vector g = fd_gradient(level_field, x, h);
    return std::abs(*eval.residual_analytic - H.gradient(*sol.eval_gradient(x)).dot(g));
}

ConvergenceStudy fd_convergence(const HamiltonianModel& H, const SingularSolution& sol,
                                const Vector& x, const std::vector<double>& steps) {
    if (steps.size() < 2) throw InvalidArgument("convergence study needs at least two steps");
    const AronssonEvaluation eval = aronsson_analytic(H, sol, x);
    if (!eval.residual_analytic) {
        throw InvalidArgument("convergence study needs a twice differentiable profile at x");
    }
    ConvergenceStudy study;
    study.analytic = *eval.residual_analytic;
    study.steps = steps;
    for (double h : steps) {
        const double fd = aronsson_fd(H, sol, x, h);
        study.fd_values.push_back(fd);
        study.errors.push_back(std::abs(fd - study.analytic));
    }
    study.min_order = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
        const double order = std::log(study.errors[i] / study.errors[i + 1]) /
                             std::log(steps[i] / steps[i + 1]);
        study.orders.push_back(order);
        // A vanishing error (exact agreement) has no measurable order.
        study.min_order = std::isnan(order) || std::isnan(study.min_order)
                              ? std::numeric_limits<double>::quiet_NaN()
                              : std::min(study.min_order, order);
    }
    return study;
}

} // namespace aronsson::verify
