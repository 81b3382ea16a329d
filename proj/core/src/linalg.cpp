#include "aronsson/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aronsson/errors.hpp"
#include "aronsson/tolerances.hpp"

namespace aronsson {

namespace {

void validate_coords(const std::vector<double>& coords) {
    if (coords.size() < 2) {
        throw InvalidArgument("vectors need at least 2 coordinates, got " +
                              std::to_string(coords.size()));
    }
    for (double c : coords) {
        if (!std::isfinite(c)) throw InvalidArgument("vector entries must be finite");
    }
}

} // namespace

Vector::Vector(std::vector<double> coords) : coords_(std::move(coords)) {
    validate_coords(coords_);
}

Vector::Vector(std::initializer_list<double> coords) : coords_(coords) {
    validate_coords(coords_);
}

Vector Vector::zeros(std::size_t n) { return Vector(std::vector<double>(n, 0.0)); }

Vector Vector::unit(std::size_t n, std::size_t axis) {
    std::vector<double> c(n, 0.0);
    c.at(axis) = 1.0;
    return Vector(std::move(c));
}

double Vector::dot(const Vector& other) const {
    require_same_dimension("dot product", size(), other.size());
    double s = 0.0;
    for (std::size_t i = 0; i < coords_.size(); ++i) s += coords_[i] * other.coords_[i];
    return s;
}

double Vector::squared_norm() const { return dot(*this); }

double Vector::norm() const { return std::sqrt(squared_norm()); }

Vector operator+(const Vector& lhs, const Vector& rhs) {
    require_same_dimension("vector sum", lhs.size(), rhs.size());
    std::vector<double> c(lhs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = lhs.coords_[i] + rhs.coords_[i];
    return Vector(std::move(c), Vector::Unchecked{});
}

Vector operator-(const Vector& lhs, const Vector& rhs) {
    require_same_dimension("vector difference", lhs.size(), rhs.size());
    std::vector<double> c(lhs.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = lhs.coords_[i] - rhs.coords_[i];
    return Vector(std::move(c), Vector::Unchecked{});
}

Vector operator-(const Vector& v) { return -1.0 * v; }

Vector operator*(double s, const Vector& v) {
    std::vector<double> c(v.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * v.coords_[i];
    return Vector(std::move(c), Vector::Unchecked{});
}

void require_same_dimension(const char* what, std::size_t expected, std::size_t actual) {
    if (expected != actual) throw DimensionMismatch(what, expected, actual);
}

Matrix Matrix::zeros(std::size_t n) { return Matrix(n); }

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::outer(const Vector& u, const Vector& v) {
    require_same_dimension("outer product", u.size(), v.size());
    Matrix m(u.size());
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = u[i] * v[j];
    return m;
}

Matrix Matrix::from_rows(std::vector<std::vector<double>> rows) {
    Matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        require_same_dimension("matrix row", rows.size(), rows[i].size());
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Vector Matrix::apply(const Vector& v) const {
    require_same_dimension("matrix-vector product", n_, v.size());
    std::vector<double> out(n_, 0.0);
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
    return Vector(std::move(out));
}

double Matrix::quadratic_form(const Vector& v) const {
    require_same_dimension("quadratic form", n_, v.size());
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i)
        for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * v[i] * v[j];
    return s;
}

double Matrix::max_abs_difference(const Matrix& other) const {
    require_same_dimension("matrix difference", n_, other.n_);
    double worst = 0.0;
    for (std::size_t k = 0; k < data_.size(); ++k)
        worst = std::max(worst, std::abs(data_[k] - other.data_[k]));
    return worst;
}

double Matrix::max_abs() const {
    double worst = 0.0;
    for (double v : data_) worst = std::max(worst, std::abs(v));
    return worst;
}

Matrix operator+(const Matrix& lhs, const Matrix& rhs) {
    require_same_dimension("matrix sum", lhs.n_, rhs.n_);
    Matrix m(lhs.n_);
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = lhs.data_[k] + rhs.data_[k];
    return m;
}

Matrix operator*(double s, const Matrix& in) {
    Matrix m(in.n_);
    for (std::size_t k = 0; k < m.data_.size(); ++k) m.data_[k] = s * in.data_[k];
    return m;
}

void Tolerances::validate() const {
    for (double v : {exact_zero, fd_rel, flatness, jet_margin}) {
        if (!(std::isfinite(v) && v > 0.0)) {
            throw InvalidArgument("tolerances must be finite and strictly positive");
        }
    }
}

} // namespace aronsson
