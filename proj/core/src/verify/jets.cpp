#include "aronsson/verify/jets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aronsson/errors.hpp"

namespace aronsson::verify {

namespace {

constexpr std::size_t kRings = 5;

// Unit vector orthogonal to e, built from the coordinate axis least aligned with e.
Vector orthogonal_unit(const Vector& e) {
    const std::size_t n = e.size();
    if (n == 2) return Vector{-e[1], e[0]};
    std::size_t axis = 0;
    for (std::size_t i = 1; i < n; ++i) {
        if (std::abs(e[i]) < std::abs(e[axis])) axis = i;
    }
    const Vector ax = Vector::unit(n, axis);
    const Vector q = ax - ax.dot(e) * e;
    return q / q.norm();
}

// Offsets on concentric rings in the plane spanned by e and q. Off-plane
// directions add nothing: both u - (linear part) and the sampled Hessians
// only see the e and q components.
std::vector<Vector> ball_offsets(const Vector& e, const Vector& q, const JetSamplerParams& params) {
    const std::size_t per_ring = std::max<std::size_t>(4, params.ball_samples / kRings);
    std::vector<Vector> out;
    out.reserve(per_ring * kRings);
    for (std::size_t r = 1; r <= kRings; ++r) {
        const double radius = params.radius * static_cast<double>(r) / static_cast<double>(kRings);
        for (std::size_t k = 0; k < per_ring; ++k) {
            const double theta =
                2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(per_ring);
            out.push_back((radius * std::cos(theta)) * e + (radius * std::sin(theta)) * q);
        }
    }
    return out;
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
    if (count <= 1) return {0.5 * (lo + hi)};
    std::vector<double> out(count);
    for (std::size_t i = 0; i < count; ++i) {
        out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return out;
}

JetClassification classify_with_offsets(const HamiltonianModel& H, const SingularSolution& sol,
                                        const Vector& x0, double u0, const Vector& p,
                                        const Matrix& X, const std::vector<Vector>& offsets,
                                        double margin) {
    JetClassification c;
    const Vector hp = H.gradient(p);
    c.A = X.quadratic_form(hp);
    c.min_gap = INFINITY;
    c.max_gap = -INFINITY;
    for (const Vector& h : offsets) {
        const double phi = u0 + p.dot(h) + 0.5 * X.quadratic_form(h);
        const double gap = phi - sol.eval_u(x0 + h);
        c.min_gap = std::min(c.min_gap, gap);
        c.max_gap = std::max(c.max_gap, gap);
    }
    c.upper_touching = c.min_gap >= -margin;
    c.lower_touching = c.max_gap <= margin;
    return c;
}

} // namespace

std::string_view to_string(JetSide side) { return side == JetSide::Upper ? "upper" : "lower"; }

JetClassification classify_jet(const HamiltonianModel& H, const SingularSolution& sol,
                               const Vector& x0, const Vector& p, const Matrix& X,
                               const JetSamplerParams& params) {
    const Vector e = sol.segment().direction() / sol.segment().length();
    const auto offsets = ball_offsets(e, orthogonal_unit(e), params);
    return classify_with_offsets(H, sol, x0, sol.eval_u(x0), p, X, offsets, params.margin);
}

JetCheckResult viscosity_jet_check(const HamiltonianModel& H, const SingularSolution& sol,
                                   const Vector& x0, const JetSamplerParams& params) {
    const double t0 = sol.phase(x0);
    const auto kinks = sol.profile().kinks(t0 - kKinkTolerance, t0 + kKinkTolerance);
    if (kinks.empty()) {
        throw NotOnKink("d.x0 = " + std::to_string(t0) + " is not a declared kink of the profile");
    }

    const Segment& seg = sol.segment();
    const Vector e = seg.direction() / seg.length();
    const Vector q = orthogonal_unit(e);
    const Matrix ee = Matrix::outer(e, e);
    const Matrix qq = Matrix::outer(q, q);
    const Matrix eq = Matrix::outer(e, q) + Matrix::outer(q, e);
    const auto offsets = ball_offsets(e, q, params);
    const double u0 = sol.eval_u(x0);

    const auto [left, right] = sol.profile().one_sided_derivatives(kinks.front());
    const auto slopes = linspace(std::min(left, right), std::max(left, right),
                                 params.gradient_samples);
    const auto curvatures =
        linspace(-params.curvature_max, params.curvature_max, params.curvature_samples);
    const auto cross = linspace(-params.curvature_max, params.curvature_max, params.cross_samples);

    JetCheckResult result{x0, kinks.front()};
    std::optional<JetWitness> min_upper;
    std::optional<JetWitness> max_lower;
    std::vector<JetWitness> violations;

    for (double s : slopes) {
        const Vector p = seg.midpoint() + (0.5 * s) * seg.direction();
        for (double c1 : curvatures) {
            for (double c2 : curvatures) {
                for (double c3 : cross) {
                    const Matrix X = c1 * ee + c2 * qq + c3 * eq;
                    const auto c =
                        classify_with_offsets(H, sol, x0, u0, p, X, offsets, params.margin);
                    ++result.tested_jets;
                    if (c.upper_touching) {
                        ++result.upper_touching;
                        if (!min_upper || c.A < min_upper->A) min_upper = JetWitness{p, X, JetSide::Upper, c.A};
                        if (c.A < -params.margin) {
                            ++result.sub_violations;
                            result.worst_sub_violation = std::max(result.worst_sub_violation, -c.A);
                            if (violations.size() < params.max_witnesses)
                                violations.push_back({p, X, JetSide::Upper, c.A});
                        }
                    }
                    if (c.lower_touching) {
                        ++result.lower_touching;
                        if (!max_lower || c.A > max_lower->A) max_lower = JetWitness{p, X, JetSide::Lower, c.A};
                        if (c.A > params.margin) {
                            ++result.super_violations;
                            result.worst_super_violation = std::max(result.worst_super_violation, c.A);
                            if (violations.size() < params.max_witnesses)
                                violations.push_back({p, X, JetSide::Lower, c.A});
                        }
                    }
                }
            }
        }
    }

    result.witnesses = std::move(violations);
    if (min_upper) result.witnesses.push_back(*min_upper);
    if (max_lower) result.witnesses.push_back(*max_lower);
    return result;
}

} // namespace aronsson::verify
