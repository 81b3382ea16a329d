#pragma once

#include <functional>

#include "aronsson/linalg.hpp"

namespace aronsson {

using ScalarField = std::function<double(const Vector&)>;

/// Central differences (F(x + h e_i) - F(x - h e_i)) / 2h.
Vector fd_gradient(const ScalarField& field, const Vector& x, double h);

/// Second central differences; mixed entries use the four-point stencil
/// x +- h e_i +- h e_j. The result is symmetric.
Matrix fd_hessian(const ScalarField& field, const Vector& x, double h);

} // namespace aronsson
