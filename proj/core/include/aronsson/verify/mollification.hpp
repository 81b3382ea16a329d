#pragma once

#include <span>
#include <vector>

#include "aronsson/grid.hpp"
#include "aronsson/hamiltonian.hpp"
#include "aronsson/mollifier.hpp"
#include "aronsson/tolerances.hpp"

namespace aronsson::verify {

struct MollificationRow {
    double epsilon = 0.0;
    double sup_distance = 0.0;   ///< max over the grid of |u^eps - u|
    double distance_bound = 0.0; ///< lip(f) eps
    double lip_certified = 0.0;  ///< certify_lip(f^eps)
    double max_beta = 0.0;
    double max_residual = 0.0;   ///< max |A[u^eps]| (analytic)
};

struct MollificationTable {
    double lip_reference = 0.0; ///< lip_bound of the unmollified profile
    std::vector<MollificationRow> rows;
    bool distance_bound_ok = false;
    bool decreasing_ok = false;
    bool lip_ok = false;
    bool residual_ok = false;
    bool passed = false;
};

inline constexpr std::size_t kLipSamples = 4001;

/// Builds f^eps and u^eps for each eps (strictly decreasing) and tabulates
/// uniform distance to u, the Lipschitz constant of f^eps and the analytic
/// Aronsson residual of u^eps over the grid.
MollificationTable mollification_suite(const HamiltonianModel& H, const Segment& seg,
                                       const ProfilePtr& f, std::span<const double> epsilons,
                                       const Grid& grid, const Tolerances& tol,
                                       std::size_t quad_points = kDefaultQuadPoints);

} // namespace aronsson::verify
