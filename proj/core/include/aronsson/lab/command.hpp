#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "aronsson/lab/emit.hpp"
#include "aronsson/lab/runner.hpp"

namespace aronsson::lab {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitHypothesis = 2;
inline constexpr int kExitUsage = 3;

struct VerifyCommand {
    std::filesystem::path scenario;
    std::filesystem::path outdir = "aronsson-out";
    std::vector<Format> formats{Format::Json};
    std::uint64_t seed = kDefaultSeed;
};

/// load -> run -> emit, with a one-screen summary on `out` and diagnostics on
/// `err`. Returns the process exit code.
int verify_command(const VerifyCommand& cmd, std::ostream& out, std::ostream& err);

} // namespace aronsson::lab
