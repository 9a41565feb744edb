#include "qdiv/lu.hpp"

#include <cmath>
#include <limits>
#include <utility>

namespace qdiv {

LuFactors lu_factor(ComplexMatrix a) {
    require(a.is_square(), ErrorKind::NotSquare, "lu_factor: matrix not square");
    const int n = a.rows();
    std::vector<int> piv(n);

    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::abs(a(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double v = std::abs(a(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        require(best > 0.0, ErrorKind::SingularMap, "lu_factor: matrix is singular");
        piv[k] = p;
        if (p != k)
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));

        const cplx pivot = a(k, k);
#pragma omp parallel for schedule(static) if (n - k >= 128)
        for (int i = k + 1; i < n; ++i) {
            const cplx m = a(i, k) / pivot;
            a(i, k) = m;
            if (m == cplx(0.0)) continue;
            for (int j = k + 1; j < n; ++j) a(i, j) -= m * a(k, j);
        }
    }
    return {std::move(a), std::move(piv)};
}

ComplexMatrix lu_solve(const LuFactors& f, const ComplexMatrix& b) {
    const int n = f.lu.rows();
    require(b.rows() == n, ErrorKind::DimensionMismatch, "lu_solve: rhs rows mismatch");
    ComplexMatrix x = b;

    for (int k = 0; k < n; ++k) {
        if (f.piv[k] != k)
            for (int c = 0; c < x.cols(); ++c) std::swap(x(k, c), x(f.piv[k], c));
    }
    // forward: L y = P b
    for (int k = 0; k < n; ++k)
        for (int i = k + 1; i < n; ++i) {
            const cplx m = f.lu(i, k);
            if (m == cplx(0.0)) continue;
            for (int c = 0; c < x.cols(); ++c) x(i, c) -= m * x(k, c);
        }
    // back: U x = y
    for (int k = n - 1; k >= 0; --k) {
        const cplx d = f.lu(k, k);
        for (int c = 0; c < x.cols(); ++c) x(k, c) /= d;
        for (int i = 0; i < k; ++i) {
            const cplx m = f.lu(i, k);
            if (m == cplx(0.0)) continue;
            for (int c = 0; c < x.cols(); ++c) x(i, c) -= m * x(k, c);
        }
    }
    return x;
}

ComplexMatrix inverse(const ComplexMatrix& a) {
    return lu_solve(lu_factor(a), ComplexMatrix::identity(a.rows()));
}

double cond1_estimate(const ComplexMatrix& a) {
    try {
        return a.norm_one() * inverse(a).norm_one();
    } catch (const Error&) {
        return std::numeric_limits<double>::infinity();
    }
}

} // namespace qdiv
