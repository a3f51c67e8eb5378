#pragma once

#include "abelaut/linalg/matrix.hpp"
#include "abelaut/scalars/integer.hpp"
#include "abelaut/scalars/rational.hpp"

#include <optional>
#include <vector>

namespace abelaut {

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long>> rows);
IntMatrix int_identity(std::size_t n);
RatMatrix to_rational(const IntMatrix& m);
// Exact conversion; nullopt when some entry is not an integer.
std::optional<IntMatrix> to_integer(const RatMatrix& m);

// Fraction-free (Bareiss) determinant.
Integer determinant_bareiss(IntMatrix m);

// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ... (d_i >= 0).
struct SmithForm {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
};
SmithForm smith_normal_form(const IntMatrix& a);

// Row-style Hermite normal form of the lattice spanned by the rows; zero rows dropped.
IntMatrix hermite_row_basis(IntMatrix rows);

// Z-basis of {x in Z^n : A x = 0}, size-reduced and deterministically ordered.
std::vector<IntVector> integer_kernel_basis(const IntMatrix& a);

// Greedy pairwise size reduction; keeps the Z-span and shortens vectors.
std::vector<IntVector> size_reduce(std::vector<IntVector> basis);

}  // namespace abelaut
