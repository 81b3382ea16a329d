#include "aronsson/finite_difference.hpp"

#include "aronsson/errors.hpp"

namespace aronsson {

namespace {

Vector shifted(const Vector& x, std::size_t i, double di, std::size_t j, double dj) {
    std::vector<double> c(x.coords().begin(), x.coords().end());
    c[i] += di;
    c[j] += dj;
    return Vector(std::move(c));
}

void require_positive_step(double h) {
    if (!(h > 0.0)) throw InvalidArgument("finite-difference step must be positive");
}

} // namespace

Vector fd_gradient(const ScalarField& field, const Vector& x, double h) {
    require_positive_step(h);
    std::vector<double> g(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        g[i] = (field(shifted(x, i, h, i, 0.0)) - field(shifted(x, i, -h, i, 0.0))) / (2.0 * h);
    }
    return Vector(std::move(g));
}

Matrix fd_hessian(const ScalarField& field, const Vector& x, double h) {
    require_positive_step(h);
    const std::size_t n = x.size();
    const double centre = field(x);
    Matrix hess = Matrix::zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double plus = field(shifted(x, i, h, i, 0.0));
        const double minus = field(shifted(x, i, -h, i, 0.0));
        hess(i, i) = (plus - 2.0 * centre + minus) / (h * h);
        for (std::size_t j = i + 1; j < n; ++j) {
            const double pp = field(shifted(x, i, h, j, h));
            const double pm = field(shifted(x, i, h, j, -h));
            const double mp = field(shifted(x, i, -h, j, h));
            const double mm = field(shifted(x, i, -h, j, -h));
            hess(i, j) = (pp - pm - mp + mm) / (4.0 * h * h);
            hess(j, i) = hess(i, j);
        }
    }
    return hess;
}

} // namespace aronsson
