#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aronsson/hamiltonian.hpp"
#include "aronsson/lab/scenario.hpp"
#include "aronsson/solution.hpp"
#include "aronsson/verify/jets.hpp"
#include "aronsson/verify/mollification.hpp"

namespace aronsson::lab {

inline constexpr const char* kToolName = "aronsson-lab";
inline constexpr const char* kToolVersion = "1.0.0";

enum class RunStatus { Pass, Fail, HypothesisFailed };

std::string_view to_string(RunStatus status);

struct PointRecord {
    Vector x;
    double u = 0.0;
    std::optional<Vector> du{};
    std::optional<double> perpendicularity{};
    std::optional<double> eikonal{};
    std::optional<double> beta{};
    std::optional<double> aronsson_analytic{};
    std::optional<double> aronsson_fd{};
};

struct GridSummary {
    std::size_t points = 0;
    std::size_t kink_points = 0;
    std::size_t fd_skipped = 0;
    double max_perpendicularity = 0.0;
    double max_eikonal = 0.0;
    double max_beta = 0.0;
    double max_aronsson_analytic = 0.0;
    double max_aronsson_fd = 0.0;
    double max_fd_disagreement = 0.0;
};

struct ProbeSummary {
    std::size_t probes = 0;
    std::size_t hessian_probes = 0;
    double max_identity = 0.0;
    double max_gradient_error = 0.0;
    double max_hessian_error = 0.0;
};

struct CheckOutcome {
    Check check;
    bool passed = false;
    std::optional<double> measured{};  ///< headline quantity of the check
    std::optional<double> tolerance{}; ///< threshold it is compared against
};

struct OmittedCheck {
    Check check;
    std::string reason;
};

struct VerificationReport {
    VerificationReport(std::string scenario_name, std::uint64_t run_seed, Segment seg,
                       FlatnessCertificate flat)
        : scenario(std::move(scenario_name)), seed(run_seed), segment(std::move(seg)),
          flatness(std::move(flat)) {}

    std::string scenario;
    std::uint64_t seed = 0;
    RunStatus status = RunStatus::Fail;
    std::vector<std::string> flags;
    nlohmann::ordered_json hamiltonian;
    nlohmann::ordered_json profile;
    Segment segment;
    Tolerances tolerances;

    double lip_bound = 0.0;
    bool lipschitz_ok = false;
    FlatnessCertificate flatness;

    std::optional<GradientRangeCertificate> gradient_range{};
    GridSummary grid;
    std::optional<ProbeSummary> probes{};
    std::optional<verify::MollificationTable> mollification;
    std::vector<verify::JetCheckResult> jets;
    std::vector<KinkHyperplane> kinks;

    std::vector<CheckOutcome> checks;
    std::vector<OmittedCheck> omitted;
    std::vector<PointRecord> points; ///< grid order
    bool overall_pass = false;

    bool hypotheses_hold() const noexcept { return lipschitz_ok && flatness.passed; }
    /// 0 pass, 1 check failure, 2 hypothesis violation.
    int exit_code() const noexcept;
};

/// Stable field order; no timing or host information.
nlohmann::ordered_json to_json(const VerificationReport& report);

} // namespace aronsson::lab
