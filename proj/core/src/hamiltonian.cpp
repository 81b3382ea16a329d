#include "aronsson/hamiltonian.hpp"

#include <algorithm>
#include <cmath>

#include "aronsson/errors.hpp"
#include "aronsson/finite_difference.hpp"

namespace aronsson {

namespace {

nlohmann::ordered_json to_json_array(const Vector& v) {
    auto arr = nlohmann::ordered_json::array();
    for (double c : v.coords()) arr.push_back(c);
    return arr;
}

class SegDistSq final : public HamiltonianModel {
public:
    SegDistSq(Segment seg, double scale) : seg_(std::move(seg)), scale_(scale) {}

    double value(const Vector& p) const override {
        const double dist = project_to_segment(p, seg_).distance;
        return scale_ * dist * dist;
    }

    Vector gradient(const Vector& p) const override {
        return (2.0 * scale_) * (p - project_to_segment(p, seg_).point);
    }

    HamiltonianKind kind() const override { return HamiltonianKind::SegDistSq; }
    std::optional<std::size_t> dimension() const override { return seg_.dimension(); }

    nlohmann::ordered_json describe() const override {
        return {{"kind", "seg_dist_sq"}, {"scale", scale_}};
    }

private:
    Segment seg_;
    double scale_;
};

class LinearOrthogonal final : public HamiltonianModel {
public:
    LinearOrthogonal(Vector w, double offset) : w_(std::move(w)), offset_(offset) {}

    double value(const Vector& p) const override { return w_.dot(p) + offset_; }
    Vector gradient(const Vector& p) const override {
        require_same_dimension("linear_orthogonal gradient", w_.size(), p.size());
        return w_;
    }
    HamiltonianKind kind() const override { return HamiltonianKind::LinearOrthogonal; }
    std::optional<std::size_t> dimension() const override { return w_.size(); }

    nlohmann::ordered_json describe() const override {
        return {{"kind", "linear_orthogonal"}, {"w", to_json_array(w_)}, {"offset", offset_}};
    }

private:
    Vector w_;
    double offset_;
};

class Quadratic final : public HamiltonianModel {
public:
    double value(const Vector& p) const override { return 0.5 * p.squared_norm(); }
    Vector gradient(const Vector& p) const override { return p; }
    HamiltonianKind kind() const override { return HamiltonianKind::Quadratic; }
    std::optional<std::size_t> dimension() const override { return std::nullopt; }
    nlohmann::ordered_json describe() const override { return {{"kind", "quadratic"}}; }
};

class Sum final : public HamiltonianModel {
public:
    explicit Sum(std::vector<Hamiltonian> terms) : terms_(std::move(terms)) {}

    double value(const Vector& p) const override {
        double s = 0.0;
        for (const auto& t : terms_) s += t->value(p);
        return s;
    }

    Vector gradient(const Vector& p) const override {
        Vector g = Vector::zeros(p.size());
        for (const auto& t : terms_) g = g + t->gradient(p);
        return g;
    }

    HamiltonianKind kind() const override { return HamiltonianKind::Sum; }

    std::optional<std::size_t> dimension() const override {
        for (const auto& t : terms_) {
            if (auto d = t->dimension()) return d;
        }
        return std::nullopt;
    }

    nlohmann::ordered_json describe() const override {
        auto terms = nlohmann::ordered_json::array();
        for (const auto& t : terms_) terms.push_back(t->describe());
        return {{"kind", "sum"}, {"terms", std::move(terms)}};
    }

private:
    std::vector<Hamiltonian> terms_;
};

} // namespace

std::string_view to_string(HamiltonianKind kind) {
    switch (kind) {
    case HamiltonianKind::SegDistSq: return "seg_dist_sq";
    case HamiltonianKind::LinearOrthogonal: return "linear_orthogonal";
    case HamiltonianKind::Quadratic: return "quadratic";
    case HamiltonianKind::Sum: return "sum";
    }
    return "unknown";
}

Hamiltonian make_seg_dist_sq(const Segment& seg, double scale) {
    if (!(std::isfinite(scale) && scale > 0.0)) {
        throw InvalidArgument("seg_dist_sq scale must be finite and positive");
    }
    return std::make_shared<SegDistSq>(seg, scale);
}

Hamiltonian make_linear_orthogonal(const Segment& seg, Vector w, double offset) {
    require_same_dimension("linear_orthogonal w", seg.dimension(), w.size());
    if (!std::isfinite(offset)) throw InvalidArgument("linear_orthogonal offset must be finite");
    const double wn = w.norm();
    if (wn == 0.0) throw InvalidArgument("linear_orthogonal w must be nonzero");
    const double along = w.dot(seg.direction());
    if (std::abs(along) > 1e-12 * wn * seg.length()) {
        throw InvalidArgument("linear_orthogonal w is not orthogonal to b - a (w.(b-a) = " +
                              std::to_string(along) + ")");
    }
    return std::make_shared<LinearOrthogonal>(std::move(w), offset);
}

Hamiltonian make_quadratic() { return std::make_shared<Quadratic>(); }

Hamiltonian make_sum(std::vector<Hamiltonian> terms) {
    if (terms.empty()) throw InvalidArgument("sum needs at least one term");
    std::optional<std::size_t> dim;
    for (const auto& t : terms) {
        if (!t) throw InvalidArgument("sum term is null");
        if (auto d = t->dimension()) {
            if (dim) require_same_dimension("sum term", *dim, *d);
            dim = d;
        }
    }
    return std::make_shared<Sum>(std::move(terms));
}

Vector fd_gradient(const HamiltonianModel& H, const Vector& p, double h) {
    return fd_gradient([&H](const Vector& q) { return H.value(q); }, p, h);
}

FlatnessCertificate measure_flatness(const HamiltonianModel& H, const Segment& seg,
                                     std::size_t samples, const Tolerances& tol) {
    if (samples < 3) throw InvalidArgument("flatness check needs at least 3 samples");
    tol.validate();

    FlatnessCertificate cert{seg};
    cert.level = H.value(seg.midpoint());
    cert.sample_count = samples;
    double worst = -1.0;
    for (std::size_t i = 1; i <= samples; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(samples + 1);
        const Vector q = seg.point_at(t);
        const double value_res = std::abs(H.value(q) - cert.level);
        const double deriv_res = std::abs(seg.direction().dot(H.gradient(q)));
        cert.max_value_residual = std::max(cert.max_value_residual, value_res);
        cert.max_derivative_residual = std::max(cert.max_derivative_residual, deriv_res);
        if (std::max(value_res, deriv_res) > worst) {
            worst = std::max(value_res, deriv_res);
            cert.worst_t = t;
        }
    }
    cert.endpoint_value_a = H.value(seg.a()) - cert.level;
    cert.endpoint_value_b = H.value(seg.b()) - cert.level;
    cert.passed = cert.max_value_residual <= tol.flatness &&
                  cert.max_derivative_residual <= tol.flatness;
    return cert;
}

FlatnessCertificate validate_flat_segment(const HamiltonianModel& H, const Segment& seg,
                                          std::size_t samples, const Tolerances& tol) {
    FlatnessCertificate cert = measure_flatness(H, seg, samples, tol);
    if (!cert.passed) {
        throw FlatnessViolation(cert.worst_t, cert.max_value_residual,
                                cert.max_derivative_residual);
    }
    return cert;
}

} // namespace aronsson
