#pragma once

#include <utility>
#include <vector>

#include "qdiv/basis.hpp"
#include "qdiv/canonical.hpp"
#include "qdiv/complex_matrix.hpp"
#include "qdiv/dephasing.hpp"
#include "qdiv/expm.hpp"
#include "qdiv/random.hpp"
#include "qdiv/superop.hpp"

namespace qdiv::test {

inline ComplexMatrix sigma_x() { return ComplexMatrix::from_rows({{0.0, 1.0}, {1.0, 0.0}}); }
inline ComplexMatrix sigma_y() {
    return ComplexMatrix::from_rows({{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}});
}
inline ComplexMatrix sigma_z() { return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, -1.0}}); }
inline ComplexMatrix sigma_minus() { return ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}}); }

inline BathSpec single_mode_bath(double omega = 1.0, double coupling = 1.0, double temperature = 1.0) {
    return BathSpec({{omega, coupling}}, temperature);
}

inline BathSpec random_bath(Rng& rng) {
    const int n_modes = rng.uniform_int(1, 2);
    std::vector<BathMode> modes;
    for (int i = 0; i < n_modes; ++i) modes.push_back({rng.uniform(1.0, 3.0), rng.uniform(0.3, 1.2)});
    return BathSpec(std::move(modes), rng.uniform(0.5, 1.5));
}

// rho_dot = -i[k.. amplitude damping with rate gamma on a qubit
inline GeneratorSpec amplitude_damping(double gamma) {
    GeneratorSpec g;
    g.dim = 2;
    const ComplexMatrix sm = sigma_minus();
    const ComplexMatrix num = sm.adjoint() * sm;  // |1><1|
    const ComplexMatrix id = ComplexMatrix::identity(2);
    g.terms.emplace_back(cplx(gamma) * sm, sm);
    g.terms.emplace_back(cplx(-0.5 * gamma) * num, id);
    g.terms.emplace_back(id, cplx(-0.5 * gamma) * num);
    return g;
}

// rho_dot = (gamma/2)(sigma_z rho sigma_z - rho)
inline GeneratorSpec qubit_dephasing(double gamma) {
    GeneratorSpec g;
    g.dim = 2;
    const ComplexMatrix sz = sigma_z();
    const ComplexMatrix id = ComplexMatrix::identity(2);
    g.terms.emplace_back(cplx(0.5 * gamma) * sz, sz);
    g.terms.emplace_back(cplx(-0.5 * gamma) * id, id);
    return g;
}

// Random trace-annihilating, Hermiticity-preserving generator built from a
// random Hamiltonian and a random Hermitian coefficient matrix over the
// Gell-Mann basis (indefinite when mixed_sign).
inline GeneratorSpec random_generator(Rng& rng, int dim, bool mixed_sign = true) {
    const OperatorBasis basis = gell_mann_basis(dim);
    const int nb = dim * dim - 1;
    const ComplexMatrix h = random_hermitian(rng, dim);
    const ComplexMatrix d = mixed_sign ? random_hermitian(rng, nb) : random_hermitian_psd(rng, nb);
    const ComplexMatrix id = ComplexMatrix::identity(dim);
    const cplx mi(0.0, -1.0);

    GeneratorSpec g;
    g.dim = dim;
    g.terms.emplace_back(mi * h, id);
    g.terms.emplace_back(id, mi * h);
    for (int p = 0; p < nb; ++p)
        for (int q = 0; q < nb; ++q) {
            const cplx w = d(p, q);
            if (w == cplx(0.0)) continue;
            const ComplexMatrix& gp = basis.elements[p + 1];
            const ComplexMatrix& gq = basis.elements[q + 1];
            g.terms.emplace_back(w * gp, gq);
            g.terms.emplace_back(cplx(-0.5) * w * (gq * gp), id);
            g.terms.emplace_back(id, cplx(-0.5) * std::conj(w) * (gp * gq));
        }
    return g;
}

// family of unitary conjugations exp(-iHt).rho.exp(iHt) with H coupling
// level 0 to level dim-1 (crosses every split)
inline MapFamily mixing_unitary_family(int dim, const std::vector<double>& grid) {
    ComplexMatrix h(dim, dim);
    h(0, dim - 1) = 1.0;
    h(dim - 1, 0) = 1.0;
    std::vector<Superoperator> maps;
    maps.reserve(grid.size());
    for (double t : grid) maps.push_back(Superoperator::conjugation(expm(cplx(0.0, -t) * h)));
    return MapFamily::create(dim, grid, std::move(maps));
}

// sum of |a_ij - b_ij| checks via max norm
inline double superop_diff(const Superoperator& a, const Superoperator& b) {
    return max_abs_diff(a.mat, b.mat);
}

} // namespace qdiv::test
