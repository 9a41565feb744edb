#pragma once

#include <vector>

#include "qdiv/complex_matrix.hpp"

namespace qdiv {

// Generalized Gell-Mann basis for a k-level space. Ordering contract:
// elements[0] = I/sqrt(k), elements[1..k-1] the diagonal family
// diag{1,..,1,-l,0,..,0}/sqrt(l(l+1)), then the symmetric and
// antisymmetric pair families sorted ascending by (m, n). The position of
// the diagonal family is load-bearing for the dephasing block extraction.
struct OperatorBasis {
    int dim = 0;                          // k
    std::vector<ComplexMatrix> elements;  // k^2 Hermitian matrices, orthonormal under Tr[G_p G_q]
};

OperatorBasis gell_mann_basis(int k);

} // namespace qdiv
