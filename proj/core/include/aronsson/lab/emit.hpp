#pragma once

#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "aronsson/lab/report.hpp"

namespace aronsson::lab {

enum class Format { Json, Csv, PlotData };

/// Comma separated subset of {json, csv, plotdata}. Throws InvalidArgument.
std::vector<Format> parse_formats(std::string_view list);

/// Writes report.json (always), residuals.csv and fields.dat on request.
/// Throws IoError.
std::vector<std::filesystem::path> emit(const VerificationReport& report,
                                        std::span<const Format> formats,
                                        const std::filesystem::path& outdir);

/// 17 significant digits; "nan"/"inf" for non-finite values.
std::string format_real(double value);

} // namespace aronsson::lab
