#pragma once

#include "doflab/matrix.hpp"

#include <cstddef>
#include <vector>

namespace doflab {

// Float rank threshold: tau = max(rows, cols) * 2^-40 * max|entry|.
inline constexpr double kEpsScale = 0x1p-40;
double float_tolerance(const Matrix& m);

std::size_t rank(const Matrix& m);

// Columns form a basis of {x : m x = 0}. Rational: canonical RREF free-variable
// basis. Float: orthonormal columns.
Matrix null_space(const Matrix& m);

// Rational only: reduced row echelon form and its pivot columns.
struct Rref {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};
Rref rref(const Matrix& m);

// Orthonormal basis of the column span (float), `r` columns.
Matrix orthonormal_column_basis(const Matrix& m, std::size_t r);

}  // namespace doflab
