#include "qdiv/canonical.hpp"

#include <cmath>

namespace qdiv {

double hermiticity_preservation_deviation(const Superoperator& s) {
    const int d = s.dim;
    double dev = 0.0;
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            ComplexMatrix e(d, d);
            e(k, l) = 1.0;
            const ComplexMatrix lhs = s.apply(e.adjoint());
            const ComplexMatrix rhs = s.apply(e).adjoint();
            dev = std::max(dev, max_abs_diff(lhs, rhs));
        }
    return dev;
}

ComplexMatrix bilinear_coefficients(const GeneratorSpec& g, const OperatorBasis& basis) {
    require(g.dim == basis.dim, ErrorKind::DimensionMismatch, "bilinear_coefficients: dimension mismatch");
    const int nb = static_cast<int>(basis.elements.size());
    ComplexMatrix c(nb, nb);

    std::vector<cplx> ta(nb), tb(nb);
    for (const auto& [a, b] : g.terms) {
        require(a.rows() == g.dim && b.rows() == g.dim, ErrorKind::DimensionMismatch,
                "bilinear_coefficients: term dimension mismatch");
        const ComplexMatrix bdag = b.adjoint();
        for (int p = 0; p < nb; ++p) {
            ta[p] = (basis.elements[p] * a).trace();
            tb[p] = (basis.elements[p] * bdag).trace();
        }
        for (int p = 0; p < nb; ++p)
            for (int q = 0; q < nb; ++q) c(p, q) += ta[p] * tb[q];
    }
    return c;
}

ComplexMatrix bilinear_coefficients(const Superoperator& s, const OperatorBasis& basis) {
    require(s.dim == basis.dim, ErrorKind::DimensionMismatch, "bilinear_coefficients: dimension mismatch");
    const int d = s.dim;
    const int nb = static_cast<int>(basis.elements.size());
    ComplexMatrix c(nb, nb);

    // c_pq = Tr[(G_q^T kron G_p)^dagger S]
    for (int p = 0; p < nb; ++p) {
        const ComplexMatrix& gp = basis.elements[p];
        for (int q = 0; q < nb; ++q) {
            const ComplexMatrix& gq = basis.elements[q];
            cplx sum = 0.0;
            for (int b = 0; b < d; ++b)
                for (int a = 0; a < d; ++a) {
                    for (int e = 0; e < d; ++e)
                        for (int cc = 0; cc < d; ++cc) {
                            const cplx m = gq(e, b) * gp(a, cc);
                            if (m == cplx(0.0)) continue;
                            sum += std::conj(m) * s.mat(b * d + a, e * d + cc);
                        }
                }
            c(p, q) = sum;
        }
    }
    return c;
}

namespace {

DecoherenceMatrix lower_block(const ComplexMatrix& c) {
    const int nb = c.rows();
    DecoherenceMatrix d;
    d.dim_basis = nb - 1;
    ComplexMatrix block(nb - 1, nb - 1);
    for (int p = 1; p < nb; ++p)
        for (int q = 1; q < nb; ++q) block(p - 1, q - 1) = c(p, q);
    d.mat = hermitize(block);
    return d;
}

} // namespace

DecoherenceMatrix decoherence_matrix(const GeneratorSpec& g, const OperatorBasis& basis) {
    return lower_block(bilinear_coefficients(g, basis));
}

DecoherenceMatrix decoherence_matrix(const Superoperator& s, const OperatorBasis& basis) {
    return lower_block(bilinear_coefficients(s, basis));
}

namespace {

CanonicalForm canonical_from_coefficients(const ComplexMatrix& raw_c, int dim,
                                          const OperatorBasis& basis) {
    const ComplexMatrix c = hermitize(raw_c);
    const int nb = c.rows();

    CanonicalForm form;

    // H' from the G_0 cross coefficients: the unique Hermitian matrix (up
    // to a trace shift) closing the round trip for trace-annihilating
    // generators.
    const double inv_sqrt_dim = 1.0 / std::sqrt(static_cast<double>(dim));
    ComplexMatrix h = ComplexMatrix::zero(dim, dim);
    for (int p = 1; p < nb; ++p) {
        const double im = c(p, 0).imag();
        if (im != 0.0) h += cplx(-inv_sqrt_dim * im) * basis.elements[p];
    }
    form.hamiltonian = std::move(h);

    ComplexMatrix d(nb - 1, nb - 1);
    for (int p = 1; p < nb; ++p)
        for (int q = 1; q < nb; ++q) d(p - 1, q - 1) = c(p, q);
    const HermEig eig = herm_eig(d);
    form.rates = eig.eigenvalues;

    // L_p = sum_q U_qp G_q over the traceless part of the basis
    form.lindblad_ops.reserve(nb - 1);
    for (int p = 0; p < nb - 1; ++p) {
        ComplexMatrix l = ComplexMatrix::zero(dim, dim);
        for (int q = 0; q < nb - 1; ++q) {
            const cplx u = eig.eigenvectors(q, p);
            if (u != cplx(0.0)) l += u * basis.elements[q + 1];
        }
        form.lindblad_ops.push_back(std::move(l));
    }
    return form;
}

} // namespace

CanonicalForm canonical_form(const GeneratorSpec& g) {
    const OperatorBasis basis = gell_mann_basis(g.dim);
    return canonical_from_coefficients(bilinear_coefficients(g, basis), g.dim, basis);
}

CanonicalForm canonical_form(const Superoperator& s) {
    const OperatorBasis basis = gell_mann_basis(s.dim);
    return canonical_from_coefficients(bilinear_coefficients(s, basis), s.dim, basis);
}

Superoperator assemble(const CanonicalForm& form, int dim) {
    std::vector<std::pair<ComplexMatrix, ComplexMatrix>> terms;
    const ComplexMatrix id = ComplexMatrix::identity(dim);
    const cplx mi(0.0, -1.0);

    terms.emplace_back(mi * form.hamiltonian, id);
    terms.emplace_back(id, mi * form.hamiltonian);

    for (size_t p = 0; p < form.rates.size(); ++p) {
        const double gamma = form.rates[p];
        if (gamma == 0.0) continue;
        const ComplexMatrix& l = form.lindblad_ops[p];
        const ComplexMatrix ldl = l.adjoint() * l;
        terms.emplace_back(cplx(gamma) * l, l);
        terms.emplace_back(cplx(-0.5 * gamma) * ldl, id);
        terms.emplace_back(id, cplx(-0.5 * gamma) * ldl);
    }
    return Superoperator::from_terms(dim, terms);
}

PsdVerdict is_divisible_generator(const GeneratorSpec& g, double tol) {
    const OperatorBasis basis = gell_mann_basis(g.dim);
    return psd_check(decoherence_matrix(g, basis).mat, tol);
}

} // namespace qdiv
