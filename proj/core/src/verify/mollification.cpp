#include "aronsson/verify/mollification.hpp"

#include <algorithm>
#include <cmath>

#include "aronsson/errors.hpp"
#include "aronsson/parallel.hpp"
#include "aronsson/solution.hpp"
#include "aronsson/verify/residuals.hpp"

namespace aronsson::verify {

MollificationTable mollification_suite(const HamiltonianModel& H, const Segment& seg,
                                       const ProfilePtr& f, std::span<const double> epsilons,
                                       const Grid& grid, const Tolerances& tol,
                                       std::size_t quad_points) {
    if (epsilons.empty()) throw InvalidArgument("mollification suite needs at least one epsilon");
    for (std::size_t i = 1; i < epsilons.size(); ++i) {
        if (!(epsilons[i] < epsilons[i - 1])) {
            throw InvalidArgument("mollification epsilons must be strictly decreasing");
        }
    }
    require_same_dimension("mollification grid", seg.dimension(), grid.dimension());

    const SingularSolution base(seg, f);
    const auto [lo, hi] = grid.projected_range(seg.half_difference());
    const std::vector<Vector> points = grid.points();

    MollificationTable table;
    table.lip_reference = f->lip_bound();
    for (double eps : epsilons) {
        const SingularSolution smooth(seg, mollify(f, Mollifier(eps), quad_points));

        std::vector<double> distance(points.size());
        std::vector<double> beta(points.size());
        std::vector<double> residual(points.size());
        parallel_for(points.size(), [&](std::size_t i) {
            const Vector& x = points[i];
            distance[i] = std::abs(smooth.eval_u(x) - base.eval_u(x));
            const AronssonEvaluation eval = aronsson_analytic(H, smooth, x);
            beta[i] = std::abs(eval.beta.value_or(0.0));
            residual[i] = std::abs(eval.residual_analytic.value_or(0.0));
        });

        MollificationRow row;
        row.epsilon = eps;
        row.sup_distance = *std::max_element(distance.begin(), distance.end());
        row.distance_bound = table.lip_reference * eps;
        row.lip_certified = certify_lip(smooth.profile(), lo, hi, kLipSamples);
        row.max_beta = *std::max_element(beta.begin(), beta.end());
        row.max_residual = *std::max_element(residual.begin(), residual.end());
        table.rows.push_back(row);
    }

    table.distance_bound_ok = std::all_of(table.rows.begin(), table.rows.end(), [](const auto& r) {
        return r.sup_distance <= r.distance_bound;
    });
    table.decreasing_ok = true;
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        if (!(table.rows[i].sup_distance < table.rows[i - 1].sup_distance)) table.decreasing_ok = false;
    }
    table.lip_ok = std::all_of(table.rows.begin(), table.rows.end(), [&](const auto& r) {
        return r.lip_certified <= table.lip_reference + 1e-8;
    });
    table.residual_ok = std::all_of(table.rows.begin(), table.rows.end(), [&](const auto& r) {
        return r.max_residual <= tol.exact_zero;
    });
    table.passed = table.distance_bound_ok && table.decreasing_ok && table.lip_ok &&
                   table.residual_ok;
    return table;
}

} // namespace aronsson::verify
