#pragma once

#include <array>
#include <functional>

namespace aronsson::quadrature {

inline constexpr std::size_t kRuleOrder = 16;

struct Rule {
    std::array<double, kRuleOrder> nodes;   ///< on [-1, 1], ascending
    std::array<double, kRuleOrder> weights;
};

/// The 16-point Gauss-Legendre rule on [-1, 1].
const Rule& gauss_legendre_16();

/// Composite 16-point Gauss-Legendre over `panels` equal panels of [lo, hi].
double composite(const std::function<double(double)>& fn, double lo, double hi,
                 std::size_t panels);

/// Visits every node (y, w) of the composite rule over [lo, hi].
template <class Visitor>
void for_each_node(double lo, double hi, std::size_t panels, Visitor&& visit) {
    const Rule& rule = gauss_legendre_16();
    const double width = (hi - lo) / static_cast<double>(panels);
    const double half = 0.5 * width;
    for (std::size_t p = 0; p < panels; ++p) {
        const double centre = lo + (static_cast<double>(p) + 0.5) * width;
        for (std::size_t i = 0; i < kRuleOrder; ++i) {
            visit(centre + half * rule.nodes[i], half * rule.weights[i]);
        }
    }
}

} // namespace aronsson::quadrature
