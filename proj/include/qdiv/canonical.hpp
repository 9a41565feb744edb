#pragma once

#include <utility>
#include <vector>

#include "qdiv/basis.hpp"
#include "qdiv/complex_matrix.hpp"
#include "qdiv/eig.hpp"
#include "qdiv/superop.hpp"

namespace qdiv {

// Time-local generator snapshot rho_dot = sum_k A_k rho B_k^dagger.
struct GeneratorSpec {
    int dim = 0;
    std::vector<std::pair<ComplexMatrix, ComplexMatrix>> terms;

    Superoperator superop() const { return Superoperator::from_terms(dim, terms); }
};

// max over an operator basis of || S(X^dagger) - S(X)^dagger ||_max
double hermiticity_preservation_deviation(const Superoperator& s);

struct DecoherenceMatrix {
    int dim_basis = 0;     // k^2 - 1
    ComplexMatrix mat;     // Hermitian
    double time = 0.0;     // annotation only
};

struct CanonicalForm {
    ComplexMatrix hamiltonian;             // H', Hermitian
    std::vector<double> rates;             // ascending eigenvalues of d
    std::vector<ComplexMatrix> lindblad_ops;
};

// Full bilinear coefficient matrix c (k^2 x k^2) of the generator over the
// basis, rho_dot = sum_{pq} c_pq G_p rho G_q; entries per
// c_pq = sum_k Tr[G_p A_k] Tr[G_q B_k^dagger].
ComplexMatrix bilinear_coefficients(const GeneratorSpec& g, const OperatorBasis& basis);

// Same matrix recovered from a raw superoperator by projecting onto the
// orthonormal superoperator basis {G_q^T kron G_p}.
ComplexMatrix bilinear_coefficients(const Superoperator& s, const OperatorBasis& basis);

DecoherenceMatrix decoherence_matrix(const GeneratorSpec& g, const OperatorBasis& basis);
DecoherenceMatrix decoherence_matrix(const Superoperator& s, const OperatorBasis& basis);

CanonicalForm canonical_form(const GeneratorSpec& g);
CanonicalForm canonical_form(const Superoperator& s);

// Superoperator of -i[H',.] + sum_p gamma_p (L_p . L_p^dag - {L_p^dag L_p, .}/2)
Superoperator assemble(const CanonicalForm& form, int dim);

PsdVerdict is_divisible_generator(const GeneratorSpec& g, double tol = 1e-10);

} // namespace qdiv
