#include "aronsson/mollifier.hpp"

#include <algorithm>
#include <cmath>

#include "aronsson/errors.hpp"
#include "aronsson/quadrature.hpp"

namespace aronsson {

namespace {

double unit_bump(double s) {
    if (std::abs(s) >= 1.0) return 0.0;
    return std::exp(1.0 / (s * s - 1.0));
}

double unit_bump_derivative(double s) {
    if (std::abs(s) >= 1.0) return 0.0;
    const double q = s * s - 1.0;
    return std::exp(1.0 / q) * (-2.0 * s / (q * q));
}

double compute_normalization() {
    // Double the panel count until two successive integrals agree to 1e-15.
    std::size_t panels = 4;
    double previous = quadrature::composite(unit_bump, -1.0, 1.0, panels);
    for (int iter = 0; iter < 12; ++iter) {
        panels *= 2;
        const double current = quadrature::composite(unit_bump, -1.0, 1.0, panels);
        if (std::abs(current - previous) <= 1e-15 * current) return 1.0 / current;
        previous = current;
    }
    return 1.0 / previous;
}

std::size_t panels_for(std::size_t quad_points) {
    return quad_points / quadrature::kRuleOrder;
}

class Mollified final : public Profile {
public:
    Mollified(ProfilePtr inner, Mollifier m, std::size_t quad_points)
        : inner_(std::move(inner)), mollifier_(m), quad_points_(quad_points),
          panels_(panels_for(quad_points)) {}

    double value(double t) const override {
        return convolve(t, [this](double s) { return inner_->value(s); }, false);
    }

    std::optional<double> derivative(double t) const override {
        return convolve(t, [this](double s) { return inner_->derivative(s).value_or(0.0); }, false);
    }

    std::optional<double> second_derivative(double t) const override {
        // (f * eta)'' = f' * eta'
        return convolve(t, [this](double s) { return inner_->derivative(s).value_or(0.0); }, true);
    }

    double lip_bound() const override { return inner_->lip_bound(); }
    std::vector<double> kinks(double, double) const override { return {}; }
    Smoothness smoothness() const override { return Smoothness::C2; }
    std::string_view kind() const override { return "mollified"; }

    nlohmann::ordered_json describe() const override {
        return {{"kind", "mollified"},
                {"inner", inner_->describe()},
                {"epsilon", mollifier_.epsilon()},
                {"quad_points", quad_points_}};
    }

private:
    // sum_i w_i g(t - y_i) k(y_i) / sum_i w_i eta(y_i), where k is eta or eta'
    // and the nodes y_i come from composite rules on [-eps, eps] split at
    // every y = t - kink.
    template <class Integrand>
    double convolve(double t, Integrand&& g, bool use_derivative_kernel) const {
        const double eps = mollifier_.epsilon();
        std::vector<double> cuts{-eps, eps};
        for (double k : inner_->kinks(t - eps, t + eps)) {
            const double y = t - k;
            if (y > -eps && y < eps) cuts.push_back(y);
        }
        std::sort(cuts.begin(), cuts.end());

        double acc = 0.0;
        double mass = 0.0;
        for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
            if (!(cuts[c + 1] > cuts[c])) continue;
            quadrature::for_each_node(cuts[c], cuts[c + 1], panels_, [&](double y, double w) {
                const double eta = mollifier_(y);
                const double kernel = use_derivative_kernel ? mollifier_.derivative(y) : eta;
                acc += w * g(t - y) * kernel;
                mass += w * eta;
            });
        }
        return acc / mass;
    }

    ProfilePtr inner_;
    Mollifier mollifier_;
    std::size_t quad_points_;
    std::size_t panels_;
};

} // namespace

Mollifier::Mollifier(double epsilon) : epsilon_(epsilon) {
    if (!(std::isfinite(epsilon) && epsilon > 0.0)) {
        throw InvalidArgument("mollifier epsilon must be finite and positive");
    }
}

double Mollifier::normalization() {
    static const double z = compute_normalization();
    return z;
}

double Mollifier::operator()(double y) const {
    return normalization() * unit_bump(y / epsilon_) / epsilon_;
}

double Mollifier::derivative(double y) const {
    return normalization() * unit_bump_derivative(y / epsilon_) / (epsilon_ * epsilon_);
}

double Mollifier::discrete_mass(std::size_t quad_points) const {
    const std::size_t panels = panels_for(quad_points);
    if (panels == 0) throw InvalidArgument("quad_points must be at least 16");
    return quadrature::composite([this](double y) { return (*this)(y); }, -epsilon_, epsilon_,
                                 panels);
}

ProfilePtr mollify(ProfilePtr f, const Mollifier& m, std::size_t quad_points) {
    if (!f) throw InvalidArgument("mollify: null profile");
    if (quad_points < 32) throw InvalidArgument("mollify needs at least 32 quadrature points");
    const double mass_error = std::abs(m.discrete_mass(quad_points) - 1.0);
    if (!(mass_error <= kMollifierMassTolerance)) throw QuadratureFailure(mass_error);
    return std::make_shared<Mollified>(std::move(f), m, quad_points);
}

} // namespace aronsson
