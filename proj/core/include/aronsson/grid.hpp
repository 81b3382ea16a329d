#pragma once

#include <cstddef>
#include <vector>

#include "aronsson/linalg.hpp"

namespace aronsson {

/// Tensor-product sampling box centred at `origin` with per-axis half-widths
/// `extents`. Points are enumerated row-major: the last axis varies fastest.
class Grid {
public:
    Grid(Vector origin, std::vector<double> extents, std::vector<std::size_t> counts);

    std::size_t dimension() const noexcept { return origin_.size(); }
    std::size_t size() const noexcept { return size_; }
    const Vector& origin() const noexcept { return origin_; }
    const std::vector<double>& extents() const noexcept { return extents_; }
    const std::vector<std::size_t>& counts() const noexcept { return counts_; }

    double axis_value(std::size_t axis, std::size_t k) const;
    Vector point(std::size_t flat_index) const;
    std::vector<Vector> points() const;

    Vector lower_corner() const;
    Vector upper_corner() const;

    /// Range of v . x over the box.
    std::pair<double, double> projected_range(const Vector& v) const;

private:
    Vector origin_;
    std::vector<double> extents_;
    std::vector<std::size_t> counts_;
    std::size_t size_;
};

} // namespace aronsson
