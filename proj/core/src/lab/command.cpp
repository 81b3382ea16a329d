#include "aronsson/lab/command.hpp"

#include <ostream>

#include "aronsson/errors.hpp"

namespace aronsson::lab {

int verify_command(const VerifyCommand& cmd, std::ostream& out, std::ostream& err) {
    try {
        const Scenario scenario = load_scenario(cmd.scenario);
        const VerificationReport report = run(scenario, RunOptions{cmd.seed});
        const auto files = emit(report, cmd.formats, cmd.outdir);

        out << scenario.name << ": " << to_string(report.status) << '\n';
        for (const auto& c : report.checks) {
            out << "  " << (c.passed ? "PASS " : "FAIL ") << to_string(c.check);
            if (c.measured) out << "  measured=" << format_real(*c.measured);
            if (c.tolerance) out << "  tol=" << format_real(*c.tolerance);
            out << '\n';
        }
        for (const auto& o : report.omitted) {
            out << "  SKIP " << to_string(o.check) << "  (" << o.reason << ")\n";
        }
        if (!report.flatness.passed) {
            out << "  flatness violated: |H - c| = " << format_real(report.flatness.max_value_residual)
                << ", |(b-a).H_p| = " << format_real(report.flatness.max_derivative_residual)
                << " (worst t = " << format_real(report.flatness.worst_t) << ")\n";
        }
        for (const auto& f : files) out << "  wrote " << f.string() << '\n';
        return report.exit_code();
    } catch (const HypothesisViolation& e) {
        err << "hypothesis violation: " << e.what() << '\n';
        return kExitHypothesis;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace aronsson::lab
