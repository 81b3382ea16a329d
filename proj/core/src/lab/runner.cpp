#include "aronsson/lab/runner.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "aronsson/errors.hpp"
#include "aronsson/parallel.hpp"
#include "aronsson/verify/jets.hpp"
#include "aronsson/verify/mollification.hpp"
#include "aronsson/verify/residuals.hpp"

namespace aronsson::lab {

namespace {

constexpr double kLineResidualTolerance = 1e-10;
constexpr double kGradientProbeStep = 1e-6;
constexpr double kGradientProbeTolerance = 1e-6;
constexpr double kHessianProbeStep = 1e-4;
constexpr double kHessianProbeTolerance = 1e-5;
constexpr double kIdentityTolerance = 1e-6;
constexpr std::size_t kProbeAttemptsPerProbe = 50;

double max_or_zero(double current, const std::optional<double>& v) {
    return v ? std::max(current, std::abs(*v)) : current;
}

double fd_agreement_tolerance(double h) { return std::max(1e-6, 10.0 * h * h); }

std::vector<Vector> draw_probes(const Scenario& sc, const SingularSolution& sol, std::uint64_t seed,
                                double clearance) {
    std::mt19937_64 rng(seed);
    const Vector lo = sc.grid.lower_corner();
    const Vector hi = sc.grid.upper_corner();
    std::vector<std::uniform_real_distribution<double>> axes;
    for (std::size_t i = 0; i < sc.dimension; ++i) axes.emplace_back(lo[i], hi[i]);

    std::vector<Vector> out;
    const std::size_t max_attempts = kProbeAttemptsPerProbe * std::max<std::size_t>(1, sc.probes);
    for (std::size_t attempt = 0; attempt < max_attempts && out.size() < sc.probes; ++attempt) {
        std::vector<double> c(sc.dimension);
        for (std::size_t i = 0; i < sc.dimension; ++i) c[i] = axes[i](rng);
        Vector x(std::move(c));
        if (!sol.near_kink(x, clearance)) out.push_back(std::move(x));
    }
    return out;
}

} // namespace

VerificationReport run(const Scenario& sc, const RunOptions& options) {
    const HamiltonianModel& H = *sc.hamiltonian;
    const Profile& f = *sc.profile;
    const Tolerances& tol = sc.tolerances;

    VerificationReport report(sc.name, options.seed, sc.segment,
                              measure_flatness(H, sc.segment, sc.flatness_samples, tol));
    report.hamiltonian = H.describe();
    report.profile = f.describe();
    report.tolerances = tol;
    report.lip_bound = f.lip_bound();
    report.lipschitz_ok = f.lip_bound() < 1.0;

    const bool second_order = f.smoothness() != Smoothness::TruncatedSeries;
    if (f.kind() == "weierstrass") report.flags.emplace_back("weierstrass-surrogate");
    else if (!second_order) report.flags.emplace_back("truncated-series");
    if (sc.negative_control) report.flags.emplace_back("negative-control");
    if (!report.lipschitz_ok) report.flags.emplace_back("lipschitz-violated");
    if (!report.flatness.passed) report.flags.emplace_back("flatness-violated");

    const SingularSolution sol = report.lipschitz_ok
                                     ? SingularSolution(sc.segment, sc.profile)
                                     : SingularSolution::unchecked(sc.segment, sc.profile);
    report.kinks = kink_locus(sol, sc.grid);

    auto record = [&](Check check, bool passed, std::optional<double> measured = std::nullopt,
                      std::optional<double> tolerance = std::nullopt) {
        report.checks.push_back({check, passed, measured, tolerance});
    };
    auto omit = [&](Check check, std::string reason) {
        if (sc.enabled(check)) report.omitted.push_back({check, std::move(reason)});
    };

    // Grid sweep; per-point slots keep the output in grid order.
    const bool run_fd = sc.enabled(Check::AronssonFd) && second_order;
    const std::vector<Vector> points = sc.grid.points();
    std::vector<std::optional<PointRecord>> slots(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        const Vector& x = points[i];
        PointRecord rec{x, sol.eval_u(x), sol.eval_gradient(x)};
        if (rec.du) {
            rec.perpendicularity = verify::perpendicularity_residual(H, sol, x);
            rec.eikonal = verify::eikonal_residual(H, sol, x, report.flatness.level);
            const auto eval = verify::aronsson_analytic(H, sol, x);
            rec.beta = eval.beta;
            if (second_order) rec.aronsson_analytic = eval.residual_analytic;
        }
        if (run_fd && !sol.near_kink(x, 2.0 * sc.fd_step)) {
            rec.aronsson_fd = verify::aronsson_fd(H, sol, x, sc.fd_step);
        }
        slots[i] = std::move(rec);
    });

    GridSummary& gs = report.grid;
    gs.points = points.size();
    report.points.reserve(points.size());
    for (auto& slot : slots) {
        PointRecord& rec = *slot;
        if (!rec.du) ++gs.kink_points;
        gs.max_perpendicularity = max_or_zero(gs.max_perpendicularity, rec.perpendicularity);
        gs.max_eikonal = max_or_zero(gs.max_eikonal, rec.eikonal);
        gs.max_beta = max_or_zero(gs.max_beta, rec.beta);
        gs.max_aronsson_analytic = max_or_zero(gs.max_aronsson_analytic, rec.aronsson_analytic);
        if (run_fd) {
            if (!rec.aronsson_fd) {
                ++gs.fd_skipped;
            } else {
                gs.max_aronsson_fd = max_or_zero(gs.max_aronsson_fd, rec.aronsson_fd);
                if (rec.aronsson_analytic) {
                    gs.max_fd_disagreement = std::max(
                        gs.max_fd_disagreement, std::abs(*rec.aronsson_fd - *rec.aronsson_analytic));
                }
            }
        }
        report.points.push_back(std::move(rec));
    }

    if (sc.enabled(Check::GradientRange)) {
        report.gradient_range = gradient_range_certificate(sol, sc.grid);
        record(Check::GradientRange, report.gradient_range->passed,
               report.gradient_range->worst_line_residual, kLineResidualTolerance);
    }
    if (sc.enabled(Check::Perpendicularity)) {
        record(Check::Perpendicularity, gs.max_perpendicularity <= tol.exact_zero,
               gs.max_perpendicularity, tol.exact_zero);
    }
    if (sc.enabled(Check::Eikonal)) {
        record(Check::Eikonal, gs.max_eikonal <= tol.exact_zero, gs.max_eikonal, tol.exact_zero);
    }
    if (sc.enabled(Check::AronssonAnalytic)) {
        const double worst = std::max(gs.max_beta, gs.max_aronsson_analytic);
        record(Check::AronssonAnalytic, worst <= tol.exact_zero, worst, tol.exact_zero);
    }
    if (sc.enabled(Check::AronssonFd)) {
        if (!second_order) {
            omit(Check::AronssonFd, "second-order check disabled for truncated-series profile");
        } else {
            const double limit = fd_agreement_tolerance(sc.fd_step);
            record(Check::AronssonFd, gs.max_fd_disagreement <= limit, gs.max_fd_disagreement, limit);
        }
    }

    const bool want_identity = sc.enabled(Check::Identity);
    const bool want_derivatives = sc.enabled(Check::DerivativeFd);
    if ((want_identity || want_derivatives) && !second_order) {
        omit(Check::Identity, "second-order check disabled for truncated-series profile");
        omit(Check::DerivativeFd, "finite differences cannot resolve the truncated series");
    } else if (want_identity || want_derivatives) {
        const double clearance = 2.0 * std::max(sc.identity_step, kHessianProbeStep);
        const auto probes = draw_probes(sc, sol, options.seed, clearance);
        struct ProbeResult {
            double identity = 0.0;
            double gradient_error = 0.0;
            std::optional<double> hessian_error;
        };
        std::vector<ProbeResult> results(probes.size());
        const ScalarField u = [&sol](const Vector& y) { return sol.eval_u(y); };
        parallel_for(probes.size(), [&](std::size_t i) {
            const Vector& x = probes[i];
            ProbeResult r;
            if (want_identity) r.identity = verify::identity_residual(H, sol, x, sc.identity_step);
            if (want_derivatives) {
                const Vector g = *sol.eval_gradient(x);
                const Vector fd = fd_gradient(u, x, kGradientProbeStep);
                r.gradient_error = (g - fd).norm();
                if (auto hess = sol.eval_hessian(x)) {
                    r.hessian_error = hess->max_abs_difference(fd_hessian(u, x, kHessianProbeStep));
                }
            }
            results[i] = r;
        });
        ProbeSummary ps;
        ps.probes = probes.size();
        for (const auto& r : results) {
            ps.max_identity = std::max(ps.max_identity, r.identity);
            ps.max_gradient_error = std::max(ps.max_gradient_error, r.gradient_error);
            if (r.hessian_error) {
                ++ps.hessian_probes;
                ps.max_hessian_error = std::max(ps.max_hessian_error, *r.hessian_error);
            }
        }
        report.probes = ps;
        const bool enough = ps.probes == sc.probes;
        if (want_identity) {
            record(Check::Identity, enough && ps.max_identity <= kIdentityTolerance, ps.max_identity,
                   kIdentityTolerance);
        }
        if (want_derivatives) {
            record(Check::DerivativeFd,
                   enough && ps.max_gradient_error <= kGradientProbeTolerance &&
                       ps.max_hessian_error <= kHessianProbeTolerance,
                   ps.max_gradient_error, kGradientProbeTolerance);
        }
    }

    if (sc.enabled(Check::Mollification)) {
        if (!second_order) {
            omit(Check::Mollification, "second-order check disabled for truncated-series profile");
        } else if (f.kind() == "mollified") {
            omit(Check::Mollification, "profile is already mollified");
        } else if (!report.lipschitz_ok) {
            omit(Check::Mollification, "profile violates the Lipschitz hypothesis");
        } else {
            report.mollification = verify::mollification_suite(H, sc.segment, sc.profile,
                                                               sc.epsilons, sc.grid, tol);
            double worst = 0.0;
            for (const auto& row : report.mollification->rows) worst = std::max(worst, row.max_residual);
            record(Check::Mollification, report.mollification->passed, worst, tol.exact_zero);
        }
    }

    if (sc.enabled(Check::Jets)) {
        std::vector<Vector> x0s = sc.jet_points;
        if (x0s.empty()) {
            for (const auto& k : report.kinks) x0s.push_back(point_on_kink(sol, k.level, sc.grid.origin()));
        }
        if (x0s.empty()) {
            omit(Check::Jets, "no kink hyperplane meets the grid");
        } else {
            std::vector<std::optional<verify::JetCheckResult>> jet_slots(x0s.size());
            parallel_for(x0s.size(), [&](std::size_t i) {
                jet_slots[i] = verify::viscosity_jet_check(H, sol, x0s[i], sc.jet_sampler);
            });
            bool all_passed = true;
            double worst = 0.0;
            for (auto& j : jet_slots) {
                all_passed = all_passed && j->passed();
                worst = std::max({worst, j->worst_sub_violation, j->worst_super_violation});
                report.jets.push_back(std::move(*j));
            }
            record(Check::Jets, all_passed, worst, sc.jet_sampler.margin);
        }
    }

    report.overall_pass = report.hypotheses_hold() &&
                          std::all_of(report.checks.begin(), report.checks.end(),
                                      [](const CheckOutcome& c) { return c.passed; });
    report.status = !report.hypotheses_hold() ? RunStatus::HypothesisFailed
                    : report.overall_pass     ? RunStatus::Pass
                                              : RunStatus::Fail;
    return report;
}

} // namespace aronsson::lab
