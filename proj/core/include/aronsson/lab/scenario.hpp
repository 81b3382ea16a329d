#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "aronsson/geometry.hpp"
#include "aronsson/grid.hpp"
#include "aronsson/hamiltonian.hpp"
#include "aronsson/profile.hpp"
#include "aronsson/tolerances.hpp"
#include "aronsson/verify/jets.hpp"

namespace aronsson::lab {

enum class Check {
    GradientRange,
    Perpendicularity,
    Eikonal,
    AronssonAnalytic,
    AronssonFd,
    Identity,
    DerivativeFd,
    Mollification,
    Jets,
};

std::string_view to_string(Check check);
std::optional<Check> parse_check(std::string_view name);
const std::vector<Check>& all_checks();

struct Scenario {
    std::string name;
    std::size_t dimension;
    Segment segment;
    Hamiltonian hamiltonian;
    ProfilePtr profile;
    Grid grid;
    std::vector<double> epsilons{0.2, 0.1, 0.05};
    Tolerances tolerances{};
    std::vector<Check> checks = all_checks();
    /// Relaxes the Lipschitz hypothesis so the pipeline can run on a
    /// deliberately broken construction.
    bool negative_control = false;
    /// Kink points for the semijet test; empty means one per kink hyperplane
    /// meeting the grid, nearest the grid origin.
    std::vector<Vector> jet_points{};
    verify::JetSamplerParams jet_sampler{};
    std::size_t probes = 100;
    std::size_t flatness_samples = 99;
    double fd_step = 1e-3;
    double identity_step = 1e-4;

    bool enabled(Check check) const;
};

/// Throws ParseError (with line number), SchemaError, DimensionMismatch, or a
/// HypothesisViolation raised while building the segment or profile.
Scenario parse_scenario(std::string_view text);

/// Reads and parses a scenario file. Throws IoError when unreadable.
Scenario load_scenario(const std::filesystem::path& path);

/// Hamiltonian sub-schema; the segment comes from the scenario.
Hamiltonian parse_hamiltonian(const nlohmann::json& node, const Segment& seg);

/// Profile sub-schema.
ProfilePtr parse_profile(const nlohmann::json& node,
                         LipschitzPolicy policy = LipschitzPolicy::Enforce);

} // namespace aronsson::lab
