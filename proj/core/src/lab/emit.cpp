#include "aronsson/lab/emit.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "aronsson/errors.hpp"

namespace aronsson::lab {

namespace {

namespace fs = std::filesystem;

std::string csv_cell(const std::optional<double>& v) { return v ? format_real(*v) : std::string(); }

std::string dat_cell(const std::optional<double>& v) { return v ? format_real(*v) : "nan"; }

void write_file(const fs::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << contents;
    out.flush();
    if (!out) throw IoError("failed writing " + path.string());
}

std::string residual_csv(const VerificationReport& r) {
    std::ostringstream os;
    const std::size_t n = r.segment.dimension();
    for (std::size_t i = 0; i < n; ++i) os << 'x' << i + 1 << ',';
    os << 'u';
    for (std::size_t i = 0; i < n; ++i) os << ",du" << i + 1;
    os << ",perpendicularity,eikonal,beta,aronsson_analytic,aronsson_fd\n";
    for (const auto& p : r.points) {
        for (double c : p.x.coords()) os << format_real(c) << ',';
        os << format_real(p.u);
        for (std::size_t i = 0; i < n; ++i) {
            os << ',' << (p.du ? format_real((*p.du)[i]) : std::string());
        }
        os << ',' << csv_cell(p.perpendicularity) << ',' << csv_cell(p.eikonal) << ','
           << csv_cell(p.beta) << ',' << csv_cell(p.aronsson_analytic) << ','
           << csv_cell(p.aronsson_fd) << '\n';
    }
    return os.str();
}

// Whitespace separated columns; a blank line whenever the slowest-varying
// coordinates change, i.e. between rows of the last grid axis.
std::string plot_data(const VerificationReport& r) {
    std::ostringstream os;
    const std::size_t n = r.segment.dimension();
    os << '#';
    for (std::size_t i = 0; i < n; ++i) os << " x" << i + 1;
    os << " u";
    for (std::size_t i = 0; i < n; ++i) os << " Du" << i + 1;
    os << " residual\n";
    for (std::size_t k = 0; k < r.points.size(); ++k) {
        const auto& p = r.points[k];
        if (k > 0) {
            const auto& prev = r.points[k - 1].x;
            bool new_row = false;
            for (std::size_t i = 0; i + 1 < n; ++i) new_row = new_row || prev[i] != p.x[i];
            if (new_row) os << '\n';
        }
        for (double c : p.x.coords()) os << format_real(c) << ' ';
        os << format_real(p.u);
        for (std::size_t i = 0; i < n; ++i) {
            os << ' ' << (p.du ? format_real((*p.du)[i]) : std::string("nan"));
        }
        os << ' ' << dat_cell(p.aronsson_analytic) << '\n';
    }
    return os.str();
}

} // namespace

std::string format_real(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::vector<Format> parse_formats(std::string_view list) {
    std::vector<Format> out;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = std::min(list.find(',', start), list.size());
        const std::string_view token = list.substr(start, comma - start);
        Format fmt;
        if (token == "json") fmt = Format::Json;
        else if (token == "csv") fmt = Format::Csv;
        else if (token == "plotdata") fmt = Format::PlotData;
        else throw InvalidArgument("unknown output format '" + std::string(token) + "'");
        if (std::find(out.begin(), out.end(), fmt) == out.end()) out.push_back(fmt);
        start = comma + 1;
    }
    return out;
}

std::vector<fs::path> emit(const VerificationReport& report, std::span<const Format> formats,
                           const fs::path& outdir) {
    std::error_code ec;
    fs::create_directories(outdir, ec);
    if (ec) throw IoError("cannot create output directory " + outdir.string() + ": " + ec.message());

    std::vector<fs::path> written;
    const fs::path json_path = outdir / "report.json";
    write_file(json_path, to_json(report).dump(2) + "\n");
    written.push_back(json_path);

    for (Format fmt : formats) {
        if (fmt == Format::Csv) {
            const fs::path p = outdir / "residuals.csv";
            write_file(p, residual_csv(report));
            written.push_back(p);
        } else if (fmt == Format::PlotData) {
            const fs::path p = outdir / "fields.dat";
            write_file(p, plot_data(report));
            written.push_back(p);
        }
    }
    return written;
}

} // namespace aronsson::lab
