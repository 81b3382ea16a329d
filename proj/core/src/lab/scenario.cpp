#include "aronsson/lab/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "aronsson/errors.hpp"
#include "aronsson/mollifier.hpp"

namespace aronsson::lab {

namespace {

using json = nlohmann::json;

constexpr std::pair<Check, std::string_view> kCheckNames[] = {
    {Check::GradientRange, "gradient_range"},
    {Check::Perpendicularity, "perpendicularity"},
    {Check::Eikonal, "eikonal"},
    {Check::AronssonAnalytic, "aronsson_analytic"},
    {Check::AronssonFd, "aronsson_fd"},
    {Check::Identity, "identity"},
    {Check::DerivativeFd, "derivative_fd"},
    {Check::Mollification, "mollification"},
    {Check::Jets, "jets"},
};

void require_object(const json& node, const std::string& ctx) {
    if (!node.is_object()) throw SchemaError(ctx + ": expected an object");
}

void check_keys(const json& node, const std::string& ctx, std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional) {
    require_object(node, ctx);
    std::set<std::string> allowed;
    for (const char* k : required) {
        allowed.insert(k);
        if (!node.contains(k)) throw SchemaError(ctx + ": missing field '" + k + "'");
    }
    for (const char* k : optional) allowed.insert(k);
    for (const auto& item : node.items()) {
        if (!allowed.contains(item.key())) {
            throw SchemaError(ctx + ": unknown field '" + item.key() + "'");
        }
    }
}

double get_number(const json& node, const char* key, const std::string& ctx) {
    const json& v = node.at(key);
    if (!v.is_number()) throw SchemaError(ctx + "." + key + ": expected a number");
    return v.get<double>();
}

double get_number_or(const json& node, const char* key, double fallback, const std::string& ctx) {
    return node.contains(key) ? get_number(node, key, ctx) : fallback;
}

std::size_t get_count(const json& node, const char* key, const std::string& ctx) {
    const json& v = node.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw SchemaError(ctx + "." + key + ": expected a non-negative integer");
    }
    return v.get<std::size_t>();
}

std::size_t get_count_or(const json& node, const char* key, std::size_t fallback,
                         const std::string& ctx) {
    return node.contains(key) ? get_count(node, key, ctx) : fallback;
}

std::vector<double> get_reals(const json& v, const std::string& ctx) {
    if (!v.is_array()) throw SchemaError(ctx + ": expected an array of numbers");
    std::vector<double> out;
    for (const auto& item : v) {
        if (!item.is_number()) throw SchemaError(ctx + ": expected an array of numbers");
        out.push_back(item.get<double>());
    }
    return out;
}

Vector get_vector(const json& v, std::size_t dim, const std::string& ctx) {
    auto coords = get_reals(v, ctx);
    require_same_dimension(ctx.c_str(), dim, coords.size());
    try {
        return Vector(std::move(coords));
    } catch (const InvalidArgument& e) {
        throw SchemaError(ctx + ": " + e.what());
    }
}

template <class Fn>
auto rethrow_as_schema(const std::string& ctx, Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const DimensionMismatch&) {
        throw;
    } catch (const InvalidArgument& e) {
        throw SchemaError(ctx + ": " + e.what());
    }
}

std::size_t line_of(std::string_view text, std::size_t byte) {
    const std::size_t end = std::min(byte, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + end, '\n'));
}

} // namespace

std::string_view to_string(Check check) {
    for (const auto& [c, name] : kCheckNames) {
        if (c == check) return name;
    }
    return "unknown";
}

std::optional<Check> parse_check(std::string_view name) {
    for (const auto& [c, n] : kCheckNames) {
        if (n == name) return c;
    }
    return std::nullopt;
}

const std::vector<Check>& all_checks() {
    static const std::vector<Check> checks = [] {
        std::vector<Check> out;
        for (const auto& entry : kCheckNames) out.push_back(entry.first);
        return out;
    }();
    return checks;
}

bool Scenario::enabled(Check check) const {
    return std::find(checks.begin(), checks.end(), check) != checks.end();
}

Hamiltonian parse_hamiltonian(const json& node, const Segment& seg) {
    const std::string ctx = "hamiltonian";
    require_object(node, ctx);
    if (!node.contains("kind") || !node.at("kind").is_string()) {
        throw SchemaError(ctx + ": missing string field 'kind'");
    }
    const std::string kind = node.at("kind").get<std::string>();
    if (kind == "seg_dist_sq") {
        check_keys(node, ctx, {"kind"}, {"scale"});
        const double scale = get_number_or(node, "scale", 1.0, ctx);
        return rethrow_as_schema(ctx, [&] { return make_seg_dist_sq(seg, scale); });
    }
    if (kind == "linear_orthogonal") {
        check_keys(node, ctx, {"kind", "w"}, {"offset"});
        Vector w = get_vector(node.at("w"), seg.dimension(), ctx + ".w");
        const double offset = get_number_or(node, "offset", 0.0, ctx);
        return rethrow_as_schema(ctx, [&] { return make_linear_orthogonal(seg, w, offset); });
    }
    if (kind == "quadratic") {
        check_keys(node, ctx, {"kind"}, {});
        return make_quadratic();
    }
    if (kind == "sum") {
        check_keys(node, ctx, {"kind", "terms"}, {});
        if (!node.at("terms").is_array()) throw SchemaError(ctx + ".terms: expected an array");
        std::vector<Hamiltonian> terms;
        for (const auto& term : node.at("terms")) terms.push_back(parse_hamiltonian(term, seg));
        return rethrow_as_schema(ctx, [&] { return make_sum(std::move(terms)); });
    }
    throw SchemaError(ctx + ": unknown kind '" + kind + "'");
}

ProfilePtr parse_profile(const json& node, LipschitzPolicy policy) {
    const std::string ctx = "profile";
    require_object(node, ctx);
    if (!node.contains("kind") || !node.at("kind").is_string()) {
        throw SchemaError(ctx + ": missing string field 'kind'");
    }
    const std::string kind = node.at("kind").get<std::string>();
    if (kind == "sawtooth") {
        check_keys(node, ctx, {"kind", "amplitude"}, {});
        const double amp = get_number(node, "amplitude", ctx);
        return rethrow_as_schema(ctx, [&] { return make_sawtooth(amp, policy); });
    }
    if (kind == "scaled_sine") {
        check_keys(node, ctx, {"kind", "amplitude"}, {});
        const double amp = get_number(node, "amplitude", ctx);
        return rethrow_as_schema(ctx, [&] { return make_scaled_sine(amp, policy); });
    }
    if (kind == "piecewise_linear") {
        check_keys(node, ctx, {"kind", "breakpoints", "slopes"}, {});
        auto bps = get_reals(node.at("breakpoints"), ctx + ".breakpoints");
        auto slopes = get_reals(node.at("slopes"), ctx + ".slopes");
        return rethrow_as_schema(ctx, [&] { return make_piecewise_linear(bps, slopes, policy); });
    }
    if (kind == "zero") {
        check_keys(node, ctx, {"kind"}, {});
        return make_zero_profile();
    }
    if (kind == "weierstrass") {
        check_keys(node, ctx, {"kind"}, {"alpha", "nu", "terms"});
        const double alpha = get_number_or(node, "alpha", 0.5, ctx);
        const auto nu = static_cast<int>(get_count_or(node, "nu", 3, ctx));
        const auto terms = static_cast<int>(get_count_or(node, "terms", 16, ctx));
        return rethrow_as_schema(ctx, [&] { return make_weierstrass_primitive(alpha, nu, terms); });
    }
    if (kind == "mollified") {
        check_keys(node, ctx, {"kind", "inner", "epsilon"}, {"quad_points"});
        ProfilePtr inner = parse_profile(node.at("inner"), policy);
        const double eps = get_number(node, "epsilon", ctx);
        const std::size_t qp = get_count_or(node, "quad_points", kDefaultQuadPoints, ctx);
        return rethrow_as_schema(ctx, [&] { return mollify(inner, Mollifier(eps), qp); });
    }
    throw SchemaError(ctx + ": unknown kind '" + kind + "'");
}

Scenario parse_scenario(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed scenario JSON: ") + e.what(), line_of(text, e.byte));
    }
    check_keys(root, "scenario",
               {"name", "dimension", "segment", "hamiltonian", "profile", "grid"},
               {"description", "epsilons", "tolerances", "checks", "negative_control",
                "jet_points", "jet_sampler", "probes", "flatness_samples", "fd_step",
                "identity_step"});

    if (!root.at("name").is_string()) throw SchemaError("scenario.name: expected a string");
    const std::size_t dim = get_count(root, "dimension", "scenario");
    if (dim < 2) throw SchemaError("scenario.dimension: must be at least 2");

    const json& seg_node = root.at("segment");
    check_keys(seg_node, "segment", {"a", "b"}, {});
    Segment seg(get_vector(seg_node.at("a"), dim, "segment.a"),
                get_vector(seg_node.at("b"), dim, "segment.b"));

    const json& grid_node = root.at("grid");
    check_keys(grid_node, "grid", {"origin", "extents", "counts"}, {});
    Vector origin = get_vector(grid_node.at("origin"), dim, "grid.origin");
    auto extents = get_reals(grid_node.at("extents"), "grid.extents");
    require_same_dimension("grid.extents", dim, extents.size());
    std::vector<std::size_t> counts;
    if (!grid_node.at("counts").is_array()) throw SchemaError("grid.counts: expected an array");
    for (const auto& c : grid_node.at("counts")) {
        if (!c.is_number_integer() || c.get<long long>() < 2) {
            throw SchemaError("grid.counts: expected integers >= 2");
        }
        counts.push_back(c.get<std::size_t>());
    }
    require_same_dimension("grid.counts", dim, counts.size());
    Grid grid = rethrow_as_schema("grid", [&] { return Grid(origin, extents, counts); });

    bool negative_control = false;
    if (root.contains("negative_control")) {
        if (!root.at("negative_control").is_boolean()) {
            throw SchemaError("scenario.negative_control: expected a boolean");
        }
        negative_control = root.at("negative_control").get<bool>();
    }
    const auto policy = negative_control ? LipschitzPolicy::AllowViolation : LipschitzPolicy::Enforce;

    Hamiltonian H = parse_hamiltonian(root.at("hamiltonian"), seg);
    if (auto hd = H->dimension()) require_same_dimension("hamiltonian", dim, *hd);
    ProfilePtr f = parse_profile(root.at("profile"), policy);

    Scenario sc{root.at("name").get<std::string>(), dim, seg, std::move(H), std::move(f), grid};
    sc.negative_control = negative_control;

    if (root.contains("epsilons")) {
        sc.epsilons = get_reals(root.at("epsilons"), "scenario.epsilons");
        for (double e : sc.epsilons) {
            if (!(e > 0.0)) throw SchemaError("scenario.epsilons: entries must be positive");
        }
        for (std::size_t i = 1; i < sc.epsilons.size(); ++i) {
            if (!(sc.epsilons[i] < sc.epsilons[i - 1])) {
                throw SchemaError("scenario.epsilons: must be strictly decreasing");
            }
        }
    }

    if (root.contains("tolerances")) {
        const json& t = root.at("tolerances");
        check_keys(t, "tolerances", {}, {"exact_zero", "fd_rel", "flatness", "jet_margin"});
        sc.tolerances.exact_zero = get_number_or(t, "exact_zero", sc.tolerances.exact_zero, "tolerances");
        sc.tolerances.fd_rel = get_number_or(t, "fd_rel", sc.tolerances.fd_rel, "tolerances");
        sc.tolerances.flatness = get_number_or(t, "flatness", sc.tolerances.flatness, "tolerances");
        sc.tolerances.jet_margin = get_number_or(t, "jet_margin", sc.tolerances.jet_margin, "tolerances");
        rethrow_as_schema("tolerances", [&] { sc.tolerances.validate(); });
    }
    sc.jet_sampler.margin = sc.tolerances.jet_margin;

    if (root.contains("checks")) {
        const json& checks = root.at("checks");
        if (!checks.is_array()) throw SchemaError("scenario.checks: expected an array of names");
        sc.checks.clear();
        for (const auto& c : checks) {
            if (!c.is_string()) throw SchemaError("scenario.checks: expected an array of names");
            const auto parsed = parse_check(c.get<std::string>());
            if (!parsed) throw SchemaError("scenario.checks: unknown check '" + c.get<std::string>() + "'");
            if (!sc.enabled(*parsed)) sc.checks.push_back(*parsed);
        }
    }

    if (root.contains("jet_points")) {
        const json& pts = root.at("jet_points");
        if (!pts.is_array()) throw SchemaError("scenario.jet_points: expected an array of points");
        for (const auto& p : pts) sc.jet_points.push_back(get_vector(p, dim, "scenario.jet_points"));
    }

    if (root.contains("jet_sampler")) {
        const json& js = root.at("jet_sampler");
        const std::string ctx = "jet_sampler";
        check_keys(js, ctx, {},
                   {"gradient_samples", "curvature_samples", "curvature_max", "cross_samples",
                    "radius", "ball_samples"});
        auto& p = sc.jet_sampler;
        p.gradient_samples = get_count_or(js, "gradient_samples", p.gradient_samples, ctx);
        p.curvature_samples = get_count_or(js, "curvature_samples", p.curvature_samples, ctx);
        p.curvature_max = get_number_or(js, "curvature_max", p.curvature_max, ctx);
        p.cross_samples = get_count_or(js, "cross_samples", p.cross_samples, ctx);
        p.radius = get_number_or(js, "radius", p.radius, ctx);
        p.ball_samples = get_count_or(js, "ball_samples", p.ball_samples, ctx);
        if (p.gradient_samples < 2 || p.curvature_samples < 1 || p.cross_samples < 1 ||
            p.ball_samples < 4 || !(p.radius > 0.0) || !(p.curvature_max >= 0.0)) {
            throw SchemaError("jet_sampler: parameters out of range");
        }
    }

    sc.probes = get_count_or(root, "probes", sc.probes, "scenario");
    sc.flatness_samples = get_count_or(root, "flatness_samples", sc.flatness_samples, "scenario");
    if (sc.flatness_samples < 3) throw SchemaError("scenario.flatness_samples: must be >= 3");
    sc.fd_step = get_number_or(root, "fd_step", sc.fd_step, "scenario");
    sc.identity_step = get_number_or(root, "identity_step", sc.identity_step, "scenario");
    if (!(sc.fd_step > 0.0) || !(sc.identity_step > 0.0)) {
        throw SchemaError("scenario: finite-difference steps must be positive");
    }
    return sc;
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open scenario file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read scenario file " + path.string());
    return parse_scenario(buffer.str());
}

} // namespace aronsson::lab
