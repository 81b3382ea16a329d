#include "aronsson/grid.hpp"

#include <cmath>

#include "aronsson/errors.hpp"

namespace aronsson {

Grid::Grid(Vector origin, std::vector<double> extents, std::vector<std::size_t> counts)
    : origin_(std::move(origin)), extents_(std::move(extents)), counts_(std::move(counts)),
      size_(1) {
    require_same_dimension("grid extents", origin_.size(), extents_.size());
    require_same_dimension("grid counts", origin_.size(), counts_.size());
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (counts_[i] < 2) throw InvalidArgument("grid counts must be >= 2");
        if (!(std::isfinite(extents_[i]) && extents_[i] > 0.0)) {
            throw InvalidArgument("grid extents must be finite and positive");
        }
        size_ *= counts_[i];
    }
}

double Grid::axis_value(std::size_t axis, std::size_t k) const {
    const double lo = origin_[axis] - extents_[axis];
    const double step = 2.0 * extents_[axis] / static_cast<double>(counts_[axis] - 1);
    return lo + step * static_cast<double>(k);
}

Vector Grid::point(std::size_t flat_index) const {
    if (flat_index >= size_) throw InvalidArgument("grid index out of range");
    std::vector<double> c(dimension());
    for (std::size_t axis = dimension(); axis-- > 0;) {
        const std::size_t k = flat_index % counts_[axis];
        flat_index /= counts_[axis];
        c[axis] = axis_value(axis, k);
    }
    return Vector(std::move(c));
}

std::vector<Vector> Grid::points() const {
    std::vector<Vector> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) out.push_back(point(i));
    return out;
}

Vector Grid::lower_corner() const {
    std::vector<double> c(dimension());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = origin_[i] - extents_[i];
    return Vector(std::move(c));
}

Vector Grid::upper_corner() const {
    std::vector<double> c(dimension());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = origin_[i] + extents_[i];
    return Vector(std::move(c));
}

std::pair<double, double> Grid::projected_range(const Vector& v) const {
    require_same_dimension("projected range", dimension(), v.size());
    const double centre = v.dot(origin_);
    double spread = 0.0;
    for (std::size_t i = 0; i < dimension(); ++i) spread += std::abs(v[i]) * extents_[i];
    return {centre - spread, centre + spread};
}

} // namespace aronsson
