// aronsson-lab: build the explicit singular solutions u(x) = m.x + f(d.x)
// for a scenario file and verify them.
//
//   aronsson-lab verify <scenario.json> [--out DIR] [--formats json,csv,plotdata] [--seed N]
//
// Exit codes: 0 pass, 1 check failure, 2 hypothesis violation, 3 usage/IO error.

#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "aronsson/errors.hpp"
#include "aronsson/lab/command.hpp"

int main(int argc, char** argv) {
    using namespace aronsson::lab;

    CLI::App app{"Explicit singular viscosity solutions of the Aronsson equation: construction "
                 "and verification"};
    app.require_subcommand(1);

    VerifyCommand cmd;
    std::string formats = "json";
    auto* verify = app.add_subcommand("verify", "Run every enabled check on a scenario file");
    verify->add_option("scenario", cmd.scenario, "Scenario JSON file")->required();
    verify->add_option("--out", cmd.outdir, "Output directory")->capture_default_str();
    verify->add_option("--formats", formats, "Comma separated subset of json,csv,plotdata")
        ->capture_default_str();
    verify->add_option("--seed", cmd.seed, "Seed for randomized probe points")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        cmd.formats = parse_formats(formats);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const aronsson::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    return verify_command(cmd, std::cout, std::cerr);
}
