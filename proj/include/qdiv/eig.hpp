#pragma once

#include <vector>

#include "qdiv/complex_matrix.hpp"

namespace qdiv {

struct PsdVerdict {
    bool is_psd = false;
    double min_eigenvalue = 0.0;
    double tolerance_used = 0.0;
};

struct HermEig {
    std::vector<double> eigenvalues;  // ascending
    ComplexMatrix eigenvectors;       // columns, unitary
};

// Eigenvalues of (A + A^dagger)/2, ascending. The input must be square
// and Hermitian within herm_tol * max(1, ||A||_max).
std::vector<double> herm_eigvals(const ComplexMatrix& a, double herm_tol = 1e-10);

// Full eigendecomposition, same contract.
HermEig herm_eig(const ComplexMatrix& a, double herm_tol = 1e-10);

// is_psd <=> min_eigenvalue >= -tolerance_used, with
// tolerance_used = tol * max(1, |lambda|_max).
PsdVerdict psd_check(const ComplexMatrix& a, double tol = 1e-10);

} // namespace qdiv
