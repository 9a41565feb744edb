#include "qdiv/random.hpp"

#include <cmath>

#include "qdiv/eig.hpp"

namespace qdiv {

ComplexMatrix random_matrix(Rng& rng, int rows, int cols) {
    ComplexMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = rng.cnormal();
    return m;
}

ComplexMatrix random_hermitian(Rng& rng, int n) {
    return hermitize(random_matrix(rng, n, n));
}

ComplexMatrix random_hermitian_psd(Rng& rng, int n) {
    ComplexMatrix g = random_matrix(rng, n, n);
    return (1.0 / n) * (g * g.adjoint());
}

ComplexMatrix random_density(Rng& rng, int n) {
    ComplexMatrix p = random_hermitian_psd(rng, n);
    return (1.0 / p.trace().real()) * p;
}

ComplexMatrix random_unitary(Rng& rng, int n) {
    // Gram-Schmidt on a Gaussian matrix
    ComplexMatrix g = random_matrix(rng, n, n);
    for (int c = 0; c < n; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            cplx proj = 0.0;
            for (int r = 0; r < n; ++r) proj += std::conj(g(r, prev)) * g(r, c);
            for (int r = 0; r < n; ++r) g(r, c) -= proj * g(r, prev);
        }
        double nrm = 0.0;
        for (int r = 0; r < n; ++r) nrm += std::norm(g(r, c));
        nrm = std::sqrt(nrm);
        for (int r = 0; r < n; ++r) g(r, c) /= nrm;
    }
    return g;
}

std::vector<ComplexMatrix> random_kraus_set(Rng& rng, int dim, int count) {
    std::vector<ComplexMatrix> ks;
    ks.reserve(count);
    for (int k = 0; k < count; ++k) ks.push_back(random_matrix(rng, dim, dim));

    // M = sum A^dagger A, then right-normalize by M^{-1/2}
    ComplexMatrix m = ComplexMatrix::zero(dim, dim);
    for (const auto& a : ks) m += a.adjoint() * a;
    const HermEig eig = herm_eig(m);
    ComplexMatrix root_inv(dim, dim);
    for (int c = 0; c < dim; ++c) {
        const double s = 1.0 / std::sqrt(eig.eigenvalues[c]);
        for (int r = 0; r < dim; ++r) root_inv(r, c) = eig.eigenvectors(r, c) * s;
    }
    const ComplexMatrix m_inv_sqrt = root_inv * eig.eigenvectors.adjoint();
    for (auto& a : ks) a = a * m_inv_sqrt;
    return ks;
}

} // namespace qdiv
