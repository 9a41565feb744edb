#include "qdiv/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qdiv {

namespace {

// Householder reduction of a Hermitian matrix to real symmetric
// tridiagonal form. On return `diag`/`sub` hold the tridiagonal and, if
// wanted, q holds the accumulated unitary (h = q T q^dagger).
void householder_tridiag(ComplexMatrix& h, std::vector<double>& diag, std::vector<double>& sub,
                         ComplexMatrix* q) {
    const int n = h.rows();
    diag.assign(n, 0.0);
    sub.assign(std::max(n - 1, 0), 0.0);

    std::vector<cplx> w(n), p(n), tmp(n);

    for (int k = 0; k + 2 < n; ++k) {
        const int m = n - k - 1;  // active column length below the diagonal
        double xnorm2 = 0.0;
        for (int i = k + 1; i < n; ++i) xnorm2 += std::norm(h(i, k));
        const double xnorm = std::sqrt(xnorm2);
        if (xnorm == 0.0) continue;

        const cplx alpha = h(k + 1, k);
        const double aabs = std::abs(alpha);
        const cplx phase = aabs == 0.0 ? cplx(1.0) : alpha / aabs;
        const cplx beta = -phase * xnorm;

        // w = (x - beta e1)/||.||, reflector P = I - 2 w w^dagger
        double unorm2 = 0.0;
        for (int i = 0; i < m; ++i) {
            w[i] = h(k + 1 + i, k);
            if (i == 0) w[i] -= beta;
            unorm2 += std::norm(w[i]);
        }
        if (unorm2 == 0.0) continue;
        const double inv_unorm = 1.0 / std::sqrt(unorm2);
        for (int i = 0; i < m; ++i) w[i] *= inv_unorm;

        // column k and row k collapse to the single subdiagonal entry beta
        h(k + 1, k) = beta;
        h(k, k + 1) = std::conj(beta);
        for (int i = k + 2; i < n; ++i) {
            h(i, k) = 0.0;
            h(k, i) = 0.0;
        }

        // trailing block update: A <- A - 2 w q^dagger - 2 q w^dagger,
        // q = p - (w^dagger p) w, p = A w
#pragma omp parallel for schedule(static) if (m >= 128)
        for (int i = 0; i < m; ++i) {
            cplx s = 0.0;
            for (int j = 0; j < m; ++j) s += h(k + 1 + i, k + 1 + j) * w[j];
            p[i] = s;
        }
        cplx wp = 0.0;
        for (int i = 0; i < m; ++i) wp += std::conj(w[i]) * p[i];
        for (int i = 0; i < m; ++i) p[i] -= wp * w[i];

#pragma omp parallel for schedule(static) if (m >= 128)
        for (int i = 0; i < m; ++i) {
            const cplx wi = w[i], pi = p[i];
            for (int j = 0; j < m; ++j) {
                h(k + 1 + i, k + 1 + j) -=
                    2.0 * (wi * std::conj(p[j]) + pi * std::conj(w[j]));
            }
        }

        if (q) {
            // Q <- Q P restricted to columns k+1..n-1
#pragma omp parallel for schedule(static) if (n >= 128)
            for (int r = 0; r < n; ++r) {
                cplx s = 0.0;
                for (int j = 0; j < m; ++j) s += (*q)(r, k + 1 + j) * w[j];
                tmp[r] = s;
            }
#pragma omp parallel for schedule(static) if (n >= 128)
            for (int r = 0; r < n; ++r) {
                for (int j = 0; j < m; ++j) (*q)(r, k + 1 + j) -= 2.0 * tmp[r] * std::conj(w[j]);
            }
        }
    }

    // phase pass: rotate the (generally complex) subdiagonal onto the
    // positive real axis, folding the phases into q's columns
    cplx d_phase = 1.0;
    for (int i = 0; i < n; ++i) {
        if (i > 0) {
            const cplx e = h(i, i - 1);
            const double eabs = std::abs(e);
            if (eabs != 0.0) d_phase *= e / eabs;
            sub[i - 1] = eabs;
        }
        diag[i] = h(i, i).real();
        if (q && i > 0 && d_phase != cplx(1.0)) {
            for (int r = 0; r < n; ++r) (*q)(r, i) *= d_phase;
        }
    }
}

// Implicit-shift QL on a real symmetric tridiagonal, rotations applied
// to the complex columns of z when present. Classic tql2 scheme.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, ComplexMatrix* z) {
    const int n = static_cast<int>(d.size());
    if (n <= 1) return;
    e.resize(n, 0.0);  // e[n-1] used as workspace

    const double eps = std::numeric_limits<double>::epsilon();

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= eps * dd) break;
            }
            if (m != l) {
                require(iter++ < 64, ErrorKind::ModelError, "tridiag_ql: no convergence");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0, c = 1.0, p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (z) {
                        for (int k = 0; k < z->rows(); ++k) {
                            const cplx zi = (*z)(k, i), zi1 = (*z)(k, i + 1);
                            (*z)(k, i + 1) = s * zi + c * zi1;
                            (*z)(k, i) = c * zi - s * zi1;
                        }
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

void check_input(const ComplexMatrix& a, double herm_tol) {
    require(a.is_square(), ErrorKind::NotSquare, "herm_eig: matrix not square");
    require(a.herm_deviation() <= herm_tol * std::max(1.0, a.max_abs()), ErrorKind::NotHermitian,
            "herm_eig: matrix not Hermitian within tolerance");
}

void solve(const ComplexMatrix& a, std::vector<double>& vals, ComplexMatrix* vecs) {
    ComplexMatrix h = hermitize(a);
    const int n = h.rows();
    if (n == 1) {
        vals = {h(0, 0).real()};
        if (vecs) *vecs = ComplexMatrix::identity(1);
        return;
    }

    if (vecs) *vecs = ComplexMatrix::identity(n);
    std::vector<double> sub;
    householder_tridiag(h, vals, sub, vecs);
    tridiag_ql(vals, sub, vecs);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return vals[i] < vals[j]; });

    std::vector<double> sorted(n);
    for (int i = 0; i < n; ++i) sorted[i] = vals[order[i]];
    if (vecs) {
        ComplexMatrix v(n, n);
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < n; ++r) v(r, c) = (*vecs)(r, order[c]);
        *vecs = std::move(v);
    }
    vals = std::move(sorted);
}

} // namespace

std::vector<double> herm_eigvals(const ComplexMatrix& a, double herm_tol) {
    check_input(a, herm_tol);
    std::vector<double> vals;
    solve(a, vals, nullptr);
    return vals;
}

HermEig herm_eig(const ComplexMatrix& a, double herm_tol) {
    check_input(a, herm_tol);
    HermEig out;
    solve(a, out.eigenvalues, &out.eigenvectors);
    return out;
}

PsdVerdict psd_check(const ComplexMatrix& a, double tol) {
    const std::vector<double> ev = herm_eigvals(a);
    PsdVerdict v;
    v.min_eigenvalue = ev.front();
    const double lam_max = std::max(std::abs(ev.front()), std::abs(ev.back()));
    v.tolerance_used = tol * std::max(1.0, lam_max);
    v.is_psd = v.min_eigenvalue >= -v.tolerance_used;
    return v;
}

} // namespace qdiv
