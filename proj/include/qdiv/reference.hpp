#pragma once

#include <vector>

#include "qdiv/complex_matrix.hpp"

// Serial reference implementations. These deliberately use different
// algorithms than the production kernels (naive triple loop instead of
// blocked GEMM, cyclic Jacobi instead of tridiagonalization + QL, plain
// Taylor summation instead of Pade scaling-and-squaring) so the two
// sides can check each other. Linked by the tests and the benchmark
// only.
namespace qdiv::ref {

ComplexMatrix matmul_naive(const ComplexMatrix& a, const ComplexMatrix& b);

// Eigenvalues of the Hermitian part of a, ascending, via cyclic Jacobi.
std::vector<double> jacobi_eigvals(const ComplexMatrix& a, int max_sweeps = 64);

// Straight Taylor sum I + A + A^2/2! + ... with `terms` terms.
// Accurate for moderate norms (||A|| up to a few).
ComplexMatrix expm_taylor(const ComplexMatrix& a, int terms = 40);

} // namespace qdiv::ref
