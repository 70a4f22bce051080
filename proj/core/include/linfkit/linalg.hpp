#pragma once

#include "linfkit/scalar.hpp"

#include <optional>
#include <vector>

namespace lk {

using Matrix = std::vector<std::vector<Scalar>>;

struct Echelon {
    std::vector<std::vector<mpz_class>> rows;  // integer row echelon form
    std::vector<int> pivots;                   // pivot column of each nonzero row
    int ncols = 0;
};

// Fraction-free (Bareiss) elimination after clearing denominators row by row.
// Throws std::invalid_argument on ragged rows.
Echelon echelon(const Matrix& a, int ncols);

int rank(const Matrix& a, int ncols = -1);

// Basis of {v : a v = 0}; empty when the kernel is trivial. ncols is needed
// when a has no rows.
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& a, int ncols = -1);

// Some solution of a x = b, or nothing when the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& a, const std::vector<Scalar>& b, int ncols = -1);

}  // namespace lk
