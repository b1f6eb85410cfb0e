#pragma once

#include "quadbraid/ints.hpp"

namespace quadbraid {

/// Smith normal form of an integer matrix: unimodular U (rows x rows) and
/// V (cols x cols) with U * A * V = D, D diagonal with non-negative entries
/// and d_i | d_{i+1}.
struct SmithResult {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;
    std::size_t diag_count = 0;  // min(rows, cols)
};

SmithResult smith_normal_form(const IntMatrix& A);

IntMatrix identity_matrix(std::size_t n);
IntMatrix matrix_product(const IntMatrix& A, const IntMatrix& B);
IntVec matrix_apply(const IntMatrix& A, const IntVec& x);

/// Determinant by cofactor expansion; fine for the small matrices used in
/// unimodularity checks.
Int determinant(const IntMatrix& A);

}  // namespace quadbraid
