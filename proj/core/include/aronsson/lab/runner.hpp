#pragma once

#include <cstdint>

#include "aronsson/lab/report.hpp"
#include "aronsson/lab/scenario.hpp"

namespace aronsson::lab {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct RunOptions {
    std::uint64_t seed = kDefaultSeed;
};

/// flatness -> construction -> gradient range -> grid sweep -> probes ->
/// mollification -> jets. A failed check or hypothesis is recorded in the
/// report, never thrown.
VerificationReport run(const Scenario& scenario, const RunOptions& options = {});

} // namespace aronsson::lab
