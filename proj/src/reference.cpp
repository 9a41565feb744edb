#include "qdiv/reference.hpp"

#include <algorithm>
#include <cmath>

namespace qdiv::ref {

ComplexMatrix matmul_naive(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.cols() == b.rows(), ErrorKind::DimensionMismatch, "matmul_naive: inner dimensions differ");
    ComplexMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            cplx s = 0.0;
            for (int k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

std::vector<double> jacobi_eigvals(const ComplexMatrix& a, int max_sweeps) {
    require(a.is_square(), ErrorKind::NotSquare, "jacobi_eigvals: matrix not square");
    const int n = a.rows();
    ComplexMatrix m = hermitize(a);

    if (n == 1) return {m(0, 0).real()};

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(m(p, q));
        if (off <= 1e-30 * std::max(1.0, m.max_abs() * m.max_abs())) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx b = m(p, q);
                const double babs = std::abs(b);
                if (babs == 0.0) continue;

                // unitary 2x2 rotation diagonalizing [[app, b],[conj(b), aqq]]
                const double app = m(p, p).real();
                const double aqq = m(q, q).real();
                const double zeta = (aqq - app) / (2.0 * babs);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const cplx s = (t * c) * (b / babs);

                // columns: [p q] <- [p q] * [[c, s],[-conj(s), c]]
                for (int i = 0; i < n; ++i) {
                    const cplx mip = m(i, p), miq = m(i, q);
                    m(i, p) = c * mip - std::conj(s) * miq;
                    m(i, q) = s * mip + c * miq;
                }
                // rows: apply the adjoint on the left
                for (int i = 0; i < n; ++i) {
                    const cplx mpi = m(p, i), mqi = m(q, i);
                    m(p, i) = c * mpi - s * mqi;
                    m(q, i) = std::conj(s) * mpi + c * mqi;
                }
                m(p, q) = 0.0;
                m(q, p) = 0.0;
            }
        }
    }

    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = m(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

ComplexMatrix expm_taylor(const ComplexMatrix& a, int terms) {
    require(a.is_square(), ErrorKind::NotSquare, "expm_taylor: matrix not square");
    ComplexMatrix sum = ComplexMatrix::identity(a.rows());
    ComplexMatrix term = ComplexMatrix::identity(a.rows());
    for (int k = 1; k <= terms; ++k) {
        term = matmul_naive(term, a);
        term *= cplx(1.0 / k);
        sum += term;
    }
    return sum;
}

} // namespace qdiv::ref
