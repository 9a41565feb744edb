#pragma once

#include <vector>

#include "qdiv/complex_matrix.hpp"

namespace qdiv {

struct LuFactors {
    ComplexMatrix lu;       // packed L (unit diagonal) and U
    std::vector<int> piv;   // row swapped with i at step i
};

// Partial-pivot LU. Throws SingularMap on an exactly zero pivot.
LuFactors lu_factor(ComplexMatrix a);

// Solve A X = B for all columns of B.
ComplexMatrix lu_solve(const LuFactors& f, const ComplexMatrix& b);

ComplexMatrix inverse(const ComplexMatrix& a);

// ||A||_1 * ||A^{-1}||_1 (infinity when singular).
double cond1_estimate(const ComplexMatrix& a);

} // namespace qdiv
