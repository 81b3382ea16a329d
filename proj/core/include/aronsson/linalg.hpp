#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace aronsson {

/// Dense point of R^n, n >= 2, with finite entries. Immutable.
class Vector {
public:
    explicit Vector(std::vector<double> coords);
    Vector(std::initializer_list<double> coords);

    static Vector zeros(std::size_t n);
    static Vector unit(std::size_t n, std::size_t axis);

    std::size_t size() const noexcept { return coords_.size(); }
    double operator[](std::size_t i) const { return coords_[i]; }
    std::span<const double> coords() const noexcept { return coords_; }

    double dot(const Vector& other) const;
    double norm() const;
    double squared_norm() const;

    friend Vector operator+(const Vector& lhs, const Vector& rhs);
    friend Vector operator-(const Vector& lhs, const Vector& rhs);
    friend Vector operator-(const Vector& v);
    friend Vector operator*(double s, const Vector& v);
    friend Vector operator*(const Vector& v, double s) { return s * v; }
    friend Vector operator/(const Vector& v, double s) { return (1.0 / s) * v; }
    friend bool operator==(const Vector&, const Vector&) = default;

private:
    struct Unchecked {};
    Vector(std::vector<double> coords, Unchecked) : coords_(std::move(coords)) {}

    std::vector<double> coords_;
};

/// Throws DimensionMismatch when the two sizes differ.
void require_same_dimension(const char* what, std::size_t expected, std::size_t actual);

/// Dense square matrix, row-major.
class Matrix {
public:
    static Matrix zeros(std::size_t n);
    static Matrix identity(std::size_t n);
    static Matrix outer(const Vector& u, const Vector& v);
    static Matrix from_rows(std::vector<std::vector<double>> rows);

    std::size_t size() const noexcept { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
    double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }

    Vector apply(const Vector& v) const;
    /// v^T M v, i.e. M : v (x) v.
    double quadratic_form(const Vector& v) const;
    /// Largest entry of |A - B|.
    double max_abs_difference(const Matrix& other) const;
    double max_abs() const;

    friend Matrix operator+(const Matrix& lhs, const Matrix& rhs);
    friend Matrix operator*(double s, const Matrix& m);
    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}

    std::size_t n_ = 0;
    std::vector<double> data_;
};

} // namespace aronsson
