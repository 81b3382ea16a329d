#include "aronsson/profile.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "aronsson/errors.hpp"

namespace aronsson {

namespace {

void enforce_lipschitz(double lip, LipschitzPolicy policy) {
    if (!std::isfinite(lip)) throw InvalidArgument("profile Lipschitz bound must be finite");
    if (policy == LipschitzPolicy::Enforce && !(lip < 1.0)) throw LipschitzViolation(lip);
}

class Sawtooth final : public Profile {
public:
    explicit Sawtooth(double amplitude) : amplitude_(amplitude) {}

    double value(double t) const override { return amplitude_ * std::abs(reduce(t)); }

    std::optional<double> derivative(double t) const override {
        if (is_kink(t)) return std::nullopt;
        return reduce(t) > 0.0 ? amplitude_ : -amplitude_;
    }

    std::optional<double> second_derivative(double t) const override {
        if (is_kink(t)) return std::nullopt;
        return 0.0;
    }

    std::pair<double, double> one_sided_derivatives(double t) const override {
        const double k = std::round(t);
        if (std::abs(t - k) > kKinkTolerance) {
            const double d = *derivative(t);
            return {d, d};
        }
        // Even integers are minima of the tooth, odd ones maxima.
        const bool even = std::fmod(std::abs(k), 2.0) == 0.0;
        return even ? std::pair{-amplitude_, amplitude_} : std::pair{amplitude_, -amplitude_};
    }

    double lip_bound() const override { return std::abs(amplitude_); }

    std::vector<double> kinks(double lo, double hi) const override {
        std::vector<double> out;
        for (double k = std::ceil(lo); k <= std::floor(hi); k += 1.0) out.push_back(k + 0.0);
        return out;
    }

    Smoothness smoothness() const override { return Smoothness::Lipschitz; }
    std::string_view kind() const override { return "sawtooth"; }
    nlohmann::ordered_json describe() const override {
        return {{"kind", "sawtooth"}, {"amplitude", amplitude_}};
    }

private:
    // Representative of t in [-1, 1) modulo 2.
    static double reduce(double t) { return t - 2.0 * std::floor((t + 1.0) / 2.0); }

    double amplitude_;
};

class ScaledSine final : public Profile {
public:
    explicit ScaledSine(double amplitude) : amplitude_(amplitude) {}

    double value(double t) const override { return amplitude_ * std::sin(t); }
    std::optional<double> derivative(double t) const override { return amplitude_ * std::cos(t); }
    std::optional<double> second_derivative(double t) const override {
        return -amplitude_ * std::sin(t);
    }
    double lip_bound() const override { return std::abs(amplitude_); }
    std::vector<double> kinks(double, double) const override { return {}; }
    Smoothness smoothness() const override { return Smoothness::C2; }
    std::string_view kind() const override { return "scaled_sine"; }
    nlohmann::ordered_json describe() const override {
        return {{"kind", "scaled_sine"}, {"amplitude", amplitude_}};
    }

private:
    double amplitude_;
};

class PiecewiseLinear final : public Profile {
public:
    PiecewiseLinear(std::vector<double> breakpoints, std::vector<double> slopes)
        : breakpoints_(std::move(breakpoints)), slopes_(std::move(slopes)) {}

    double value(double t) const override {
        // Integral of the slope function from 0 to t.
        const double lo = std::min(0.0, t);
        const double hi = std::max(0.0, t);
        double acc = 0.0;
        for (std::size_t i = 0; i < slopes_.size(); ++i) {
            const double left = i == 0 ? -INFINITY : breakpoints_[i - 1];
            const double right = i == breakpoints_.size() ? INFINITY : breakpoints_[i];
            const double overlap = std::min(hi, right) - std::max(lo, left);
            if (overlap > 0.0) acc += slopes_[i] * overlap;
        }
        return t >= 0.0 ? acc : -acc;
    }

    std::optional<double> derivative(double t) const override {
        if (is_kink(t)) return std::nullopt;
        return slopes_[piece(t)];
    }

    std::optional<double> second_derivative(double t) const override {
        if (is_kink(t)) return std::nullopt;
        return 0.0;
    }

    std::pair<double, double> one_sided_derivatives(double t) const override {
        for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
            if (std::abs(t - breakpoints_[i]) <= kKinkTolerance) return {slopes_[i], slopes_[i + 1]};
        }
        const double d = slopes_[piece(t)];
        return {d, d};
    }

    double lip_bound() const override {
        double lip = 0.0;
        for (double s : slopes_) lip = std::max(lip, std::abs(s));
        return lip;
    }

    std::vector<double> kinks(double lo, double hi) const override {
        std::vector<double> out;
        for (double b : breakpoints_) {
            if (b >= lo && b <= hi) out.push_back(b);
        }
        return out;
    }

    Smoothness smoothness() const override {
        return breakpoints_.empty() ? Smoothness::C2 : Smoothness::Lipschitz;
    }
    std::string_view kind() const override { return "piecewise_linear"; }
    nlohmann::ordered_json describe() const override {
        return {{"kind", "piecewise_linear"}, {"breakpoints", breakpoints_}, {"slopes", slopes_}};
    }

private:
    std::size_t piece(double t) const {
        return static_cast<std::size_t>(
            std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t) - breakpoints_.begin());
    }

    std::vector<double> breakpoints_;
    std::vector<double> slopes_;
};

class WeierstrassPrimitive final : public Profile {
public:
    WeierstrassPrimitive(double alpha, int nu, int terms)
        : alpha_(alpha), nu_(nu), terms_(terms) {
        double weight = 1.0;
        double freq = std::numbers::pi;
        for (int k = 0; k <= terms_; ++k) {
            weights_.push_back(weight);
            freqs_.push_back(freq);
            mass_ += weight;
            weight *= alpha_;
            freq *= nu_;
        }
    }

    double value(double t) const override {
        double s = 0.0;
        for (std::size_t k = 0; k < weights_.size(); ++k) {
            s += weights_[k] * std::sin(freqs_[k] * t) / freqs_[k];
        }
        return s / (2.0 * mass_);
    }

    std::optional<double> derivative(double t) const override {
        double s = 0.0;
        for (std::size_t k = 0; k < weights_.size(); ++k) s += weights_[k] * std::cos(freqs_[k] * t);
        return s / (2.0 * mass_);
    }

    std::optional<double> second_derivative(double) const override { return std::nullopt; }
    double lip_bound() const override { return 0.5; }
    std::vector<double> kinks(double, double) const override { return {}; }
    Smoothness smoothness() const override { return Smoothness::TruncatedSeries; }
    std::string_view kind() const override { return "weierstrass"; }
    nlohmann::ordered_json describe() const override {
        return {{"kind", "weierstrass"}, {"alpha", alpha_}, {"nu", nu_}, {"terms", terms_}};
    }

private:
    double alpha_;
    int nu_;
    int terms_;
    double mass_ = 0.0;
    std::vector<double> weights_;
    std::vector<double> freqs_;
};

} // namespace

std::string_view to_string(Smoothness s) {
    switch (s) {
    case Smoothness::C2: return "C2";
    case Smoothness::Lipschitz: return "C0,1";
    case Smoothness::TruncatedSeries: return "truncated-series";
    }
    return "unknown";
}

std::pair<double, double> Profile::one_sided_derivatives(double t) const {
    if (auto d = derivative(t)) return {*d, *d};
    constexpr double offset = 1e-9;
    return {derivative(t - offset).value_or(0.0), derivative(t + offset).value_or(0.0)};
}

bool Profile::is_kink(double t) const {
    return !kinks(t - kKinkTolerance, t + kKinkTolerance).empty();
}

ProfilePtr make_sawtooth(double amplitude, LipschitzPolicy policy) {
    enforce_lipschitz(std::abs(amplitude), policy);
    return std::make_shared<Sawtooth>(amplitude);
}

ProfilePtr make_scaled_sine(double amplitude, LipschitzPolicy policy) {
    enforce_lipschitz(std::abs(amplitude), policy);
    return std::make_shared<ScaledSine>(amplitude);
}

ProfilePtr make_piecewise_linear(std::vector<double> breakpoints, std::vector<double> slopes,
                                 LipschitzPolicy policy) {
    if (slopes.size() != breakpoints.size() + 1) {
        throw InvalidArgument("piecewise_linear needs exactly one more slope than breakpoints");
    }
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        if (!std::isfinite(breakpoints[i])) throw InvalidArgument("breakpoints must be finite");
        if (i > 0 && !(breakpoints[i] > breakpoints[i - 1])) {
            throw InvalidArgument("breakpoints must be strictly increasing");
        }
    }
    double lip = 0.0;
    for (double s : slopes) lip = std::max(lip, std::abs(s));
    enforce_lipschitz(lip, policy);
    return std::make_shared<PiecewiseLinear>(std::move(breakpoints), std::move(slopes));
}

ProfilePtr make_zero_profile() { return make_piecewise_linear({}, {0.0}); }

ProfilePtr make_weierstrass_primitive(double alpha, int nu, int terms) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidArgument("weierstrass alpha must lie in (0,1)");
    if (nu < 3 || nu % 2 == 0) throw InvalidArgument("weierstrass nu must be an odd integer >= 3");
    if (!(alpha * nu > 1.0)) throw InvalidArgument("weierstrass needs alpha * nu > 1");
    if (terms < 0) throw InvalidArgument("weierstrass terms must be non-negative");
    return std::make_shared<WeierstrassPrimitive>(alpha, nu, terms);
}

double sup_distance(const Profile& f, const Profile& g, double lo, double hi,
                    std::size_t samples) {
    if (samples < 2) throw InvalidArgument("sup_distance needs at least 2 samples");
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
        worst = std::max(worst, std::abs(f.value(t) - g.value(t)));
    }
    return worst;
}

double certify_lip(const Profile& f, double lo, double hi, std::size_t samples) {
    if (samples < 2) throw InvalidArgument("certify_lip needs at least 2 samples");
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const double t = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(samples - 1);
        if (auto d = f.derivative(t)) worst = std::max(worst, std::abs(*d));
    }
    constexpr double h = 1e-6;
    for (double k : f.kinks(lo, hi)) {
        worst = std::max(worst, std::abs(f.value(k + h) - f.value(k - h)) / (2.0 * h));
    }
    if (worst > f.lip_bound() + 1e-12) throw CertificateMismatch(worst, f.lip_bound());
    return worst;
}

} // namespace aronsson
