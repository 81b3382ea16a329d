#pragma once

#include <cstddef>
#include <vector>

#include "aronsson/hamiltonian.hpp"
#include "aronsson/solution.hpp"

namespace aronsson::verify {

struct JetSamplerParams {
    std::size_t gradient_samples = 21;  ///< n_p
    std::size_t curvature_samples = 21; ///< per axis of the (c1, c2) grid
    double curvature_max = 5.0;
    std::size_t cross_samples = 1;      ///< off-diagonal c3 values; 1 means c3 = 0
    double radius = 1e-2;
    std::size_t ball_samples = 200;
    double margin = 1e-8;
    std::size_t max_witnesses = 16;
};

enum class JetSide { Upper, Lower };

std::string_view to_string(JetSide side);

struct JetWitness {
    Vector p;
    Matrix X;
    JetSide side;
    double A; ///< X : H_p(p) (x) H_p(p)
};

struct JetClassification {
    bool upper_touching = false; ///< phi >= u - margin on the sampled ball
    bool lower_touching = false; ///< phi <= u + margin on the sampled ball
    double A = 0.0;
    double min_gap = 0.0;        ///< min of phi - u over samples
    double max_gap = 0.0;
};

/// Tests phi(x) = u(x0) + p.(x - x0) + (x - x0)^T X (x - x0) / 2 for local
/// touching on the sampled ball around x0.
JetClassification classify_jet(const HamiltonianModel& H, const SingularSolution& sol,
                               const Vector& x0, const Vector& p, const Matrix& X,
                               const JetSamplerParams& params);

struct JetCheckResult {
    Vector x0;
    double kink_level = 0.0;
    std::size_t tested_jets = 0;
    std::size_t upper_touching = 0;
    std::size_t lower_touching = 0;
    std::size_t sub_violations = 0;   ///< upper-touching jets with A < -margin
    std::size_t super_violations = 0; ///< lower-touching jets with A > margin
    double worst_sub_violation = 0.0;
    double worst_super_violation = 0.0;
    /// Violating jets (capped), then the extremal admitted jet of each side.
    std::vector<JetWitness> witnesses{};

    bool sub_vacuous() const noexcept { return upper_touching == 0; }
    bool super_vacuous() const noexcept { return lower_touching == 0; }
    bool passed() const noexcept { return sub_violations == 0 && super_violations == 0; }
};

/// Sampled semijet test at a kink point. Gradients range over
/// m + s (b-a)/2, s between f'(t_k-) and f'(t_k+); Hessians over
/// c1 e(x)e + c2 q(x)q + c3 (e(x)q + q(x)e), e = (b-a)/|b-a|, q a unit normal of e.
/// Throws NotOnKink when d . x0 is not a declared kink.
JetCheckResult viscosity_jet_check(const HamiltonianModel& H, const SingularSolution& sol,
                                   const Vector& x0, const JetSamplerParams& params = {});

} // namespace aronsson::verify
