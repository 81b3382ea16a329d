#pragma once

#include <optional>
#include <vector>

#include "aronsson/finite_difference.hpp"
#include "aronsson/hamiltonian.hpp"
#include "aronsson/solution.hpp"

namespace aronsson::verify {

/// |(b-a) . H_p(Du(x))|, undefined where Du is.
std::optional<double> perpendicularity_residual(const HamiltonianModel& H,
                                                const SingularSolution& sol, const Vector& x);

/// |H(Du(x)) - level|, undefined where Du is.
std::optional<double> eikonal_residual(const HamiltonianModel& H, const SingularSolution& sol,
                                       const Vector& x, double level);

struct AronssonEvaluation {
    Vector x;
    std::optional<double> beta{};              ///< (b-a) . H_p(Du(x))
    std::optional<double> fpp{};               ///< f''(d . x)
    std::optional<double> residual_analytic{}; ///< fpp beta^2 / 4
    std::optional<double> residual_fd{};
};

/// Factorized operator D^2u : H_p(Du) (x) H_p(Du) = f''(d.x) beta^2 / 4.
/// beta is filled whenever Du exists; fpp and the residual whenever f'' exists.
AronssonEvaluation aronsson_analytic(const HamiltonianModel& H, const SingularSolution& sol,
                                     const Vector& x);

/// Fully numerical operator: Du and D^2u by central differences of `u`,
/// H_p analytic at the numerical gradient. No kink check.
double aronsson_fd(const HamiltonianModel& H, const ScalarField& u, const Vector& x, double h);

/// As above on the solution's u. Throws KinkProximity when x lies within 2h
/// of the kink locus.
double aronsson_fd(const HamiltonianModel& H, const SingularSolution& sol, const Vector& x,
                   double h);

/// |A[u](x) - H_p(Du) . g(x)| with g the central-difference gradient of
/// x -> H(Du(x)). A[u] from aronsson_analytic. Throws KinkProximity near kinks
/// and InvalidArgument when f'' is unavailable at x.
double identity_residual(const HamiltonianModel& H, const SingularSolution& sol, const Vector& x,
                         double h);

struct ConvergenceStudy {
    double analytic = 0.0;
    std::vector<double> steps;
    std::vector<double> fd_values;
    std::vector<double> errors;
    std::vector<double> orders; ///< log(e_i / e_{i+1}) / log(h_i / h_{i+1})
    double min_order = 0.0;
};

/// FD-vs-analytic agreement of the Aronsson operator over a decreasing step sequence.
ConvergenceStudy fd_convergence(const HamiltonianModel& H, const SingularSolution& sol,
                                const Vector& x, const std::vector<double>& steps);

} // namespace aronsson::verify
