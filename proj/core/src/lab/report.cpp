#include "aronsson/lab/report.hpp"

namespace aronsson::lab {

namespace {

using ojson = nlohmann::ordered_json;

ojson vec(const Vector& v) {
    auto arr = ojson::array();
    for (double c : v.coords()) arr.push_back(c);
    return arr;
}

ojson mat(const Matrix& m) {
    auto rows = ojson::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        auto row = ojson::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <class T>
ojson opt(const std::optional<T>& v) {
    return v ? ojson(*v) : ojson(nullptr);
}

ojson flatness_json(const FlatnessCertificate& c) {
    return {{"level", c.level},
            {"max_value_residual", c.max_value_residual},
            {"max_derivative_residual", c.max_derivative_residual},
            {"worst_t", c.worst_t},
            {"sample_count", c.sample_count},
            {"endpoint_value_a", c.endpoint_value_a},
            {"endpoint_value_b", c.endpoint_value_b},
            {"passed", c.passed}};
}

ojson jets_json(const verify::JetCheckResult& j) {
    auto witnesses = ojson::array();
    for (const auto& w : j.witnesses) {
        witnesses.push_back({{"side", std::string(verify::to_string(w.side))},
                             {"p", vec(w.p)},
                             {"X", mat(w.X)},
                             {"A", w.A}});
    }
    return {{"x0", vec(j.x0)},
            {"kink_level", j.kink_level},
            {"tested_jets", j.tested_jets},
            {"upper_touching", j.upper_touching},
            {"lower_touching", j.lower_touching},
            {"sub_vacuous", j.sub_vacuous()},
            {"super_vacuous", j.super_vacuous()},
            {"sub_violations", j.sub_violations},
            {"super_violations", j.super_violations},
            {"worst_sub_violation", j.worst_sub_violation},
            {"worst_super_violation", j.worst_super_violation},
            {"passed", j.passed()},
            {"witnesses", std::move(witnesses)}};
}

} // namespace

std::string_view to_string(RunStatus status) {
    switch (status) {
    case RunStatus::Pass: return "pass";
    case RunStatus::Fail: return "fail";
    case RunStatus::HypothesisFailed: return "hypothesis-failed";
    }
    return "unknown";
}

int VerificationReport::exit_code() const noexcept {
    if (!hypotheses_hold()) return 2;
    return overall_pass ? 0 : 1;
}

ojson to_json(const VerificationReport& r) {
    ojson out;
    out["tool"] = kToolName;
    out["version"] = kToolVersion;
    out["scenario"] = r.scenario;
    out["seed"] = r.seed;
    out["status"] = std::string(to_string(r.status));
    out["overall_pass"] = r.overall_pass;
    out["flags"] = r.flags;

    out["inputs"] = {{"segment", {{"a", vec(r.segment.a())}, {"b", vec(r.segment.b())}}},
                     {"hamiltonian", r.hamiltonian},
                     {"profile", r.profile},
                     {"tolerances",
                      {{"exact_zero", r.tolerances.exact_zero},
                       {"fd_rel", r.tolerances.fd_rel},
                       {"flatness", r.tolerances.flatness},
                       {"jet_margin", r.tolerances.jet_margin}}}};

    out["hypotheses"] = {{"lipschitz", {{"lip_bound", r.lip_bound}, {"holds", r.lipschitz_ok}}},
                         {"flatness", flatness_json(r.flatness)}};

    auto checks = ojson::array();
    for (const auto& c : r.checks) {
        checks.push_back({{"name", std::string(to_string(c.check))},
                          {"passed", c.passed},
                          {"measured", opt(c.measured)},
                          {"tolerance", opt(c.tolerance)}});
    }
    out["checks"] = std::move(checks);

    auto omitted = ojson::array();
    for (const auto& o : r.omitted) {
        omitted.push_back({{"check", std::string(to_string(o.check))}, {"reason", o.reason}});
    }
    out["omitted"] = std::move(omitted);

    if (r.gradient_range) {
        const auto& g = *r.gradient_range;
        out["gradient_range"] = {{"delta", g.delta},
                                 {"lambda_min", g.lambda_min},
                                 {"lambda_max", g.lambda_max},
                                 {"worst_line_residual", g.worst_line_residual},
                                 {"worst_lambda_mismatch", g.worst_lambda_mismatch},
                                 {"sample_count", g.sample_count},
                                 {"skipped_kinks", g.skipped_kinks},
                                 {"passed", g.passed}};
    } else {
        out["gradient_range"] = nullptr;
    }

    out["grid"] = {{"points", r.grid.points},
                   {"kink_points", r.grid.kink_points},
                   {"fd_skipped", r.grid.fd_skipped},
                   {"max_perpendicularity", r.grid.max_perpendicularity},
                   {"max_eikonal", r.grid.max_eikonal},
                   {"max_beta", r.grid.max_beta},
                   {"max_aronsson_analytic", r.grid.max_aronsson_analytic},
                   {"max_aronsson_fd", r.grid.max_aronsson_fd},
                   {"max_fd_disagreement", r.grid.max_fd_disagreement}};

    if (r.probes) {
        out["probes"] = {{"count", r.probes->probes},
                         {"hessian_probes", r.probes->hessian_probes},
                         {"max_identity", r.probes->max_identity},
                         {"max_gradient_error", r.probes->max_gradient_error},
                         {"max_hessian_error", r.probes->max_hessian_error}};
    } else {
        out["probes"] = nullptr;
    }

    if (r.mollification) {
        const auto& m = *r.mollification;
        auto rows = ojson::array();
        for (const auto& row : m.rows) {
            rows.push_back({{"epsilon", row.epsilon},
                            {"sup_distance", row.sup_distance},
                            {"distance_bound", row.distance_bound},
                            {"lip_certified", row.lip_certified},
                            {"max_beta", row.max_beta},
                            {"max_residual", row.max_residual}});
        }
        out["mollification"] = {{"lip_reference", m.lip_reference},
                                {"rows", std::move(rows)},
                                {"distance_bound_ok", m.distance_bound_ok},
                                {"decreasing_ok", m.decreasing_ok},
                                {"lip_ok", m.lip_ok},
                                {"residual_ok", m.residual_ok},
                                {"passed", m.passed}};
    } else {
        out["mollification"] = nullptr;
    }

    auto kinks = ojson::array();
    for (const auto& k : r.kinks) kinks.push_back(k.level);
    out["kinks"] = std::move(kinks);

    auto jets = ojson::array();
    for (const auto& j : r.jets) jets.push_back(jets_json(j));
    out["jets"] = std::move(jets);
    return out;
}

} // namespace aronsson::lab
