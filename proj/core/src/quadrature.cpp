#include "aronsson/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include "aronsson/errors.hpp"

namespace aronsson::quadrature {

namespace {

Rule build_rule() {
    using Gauss = boost::math::quadrature::gauss<double, kRuleOrder>;
    // Boost stores the non-negative half of the symmetric rule.
    const auto& abscissa = Gauss::abscissa();
    const auto& weights = Gauss::weights();
    constexpr std::size_t half = kRuleOrder / 2;
    static_assert(kRuleOrder % 2 == 0);

    Rule rule{};
    for (std::size_t i = 0; i < half; ++i) {
        rule.nodes[half - 1 - i] = -abscissa[i];
        rule.weights[half - 1 - i] = weights[i];
        rule.nodes[half + i] = abscissa[i];
        rule.weights[half + i] = weights[i];
    }
    return rule;
}

} // namespace

const Rule& gauss_legendre_16() {
    static const Rule rule = build_rule();
    return rule;
}

double composite(const std::function<double(double)>& fn, double lo, double hi,
                 std::size_t panels) {
    if (panels == 0) throw InvalidArgument("composite quadrature needs at least one panel");
    double sum = 0.0;
    for_each_node(lo, hi, panels, [&](double y, double w) { sum += w * fn(y); });
    return sum;
}

} // namespace aronsson::quadrature
