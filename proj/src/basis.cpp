#include "qdiv/basis.hpp"

#include <cmath>

namespace qdiv {

OperatorBasis gell_mann_basis(int k) {
    require(k >= 2, ErrorKind::DimensionTooSmall, "gell_mann_basis: need k >= 2");

    OperatorBasis basis;
    basis.dim = k;
    basis.elements.reserve(static_cast<size_t>(k) * k);

    ComplexMatrix g0(k, k);
    const double inv_sqrt_k = 1.0 / std::sqrt(static_cast<double>(k));
    for (int i = 0; i < k; ++i) g0(i, i) = inv_sqrt_k;
    basis.elements.push_back(std::move(g0));

    for (int l = 1; l < k; ++l) {
        ComplexMatrix g(k, k);
        const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
        for (int i = 0; i < l; ++i) g(i, i) = norm;
        g(l, l) = -static_cast<double>(l) * norm;
        basis.elements.push_back(std::move(g));
    }

    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    for (int m = 1; m < k; ++m)
        for (int n = 0; n < m; ++n) {
            ComplexMatrix g(k, k);
            g(m, n) = inv_sqrt2;
            g(n, m) = inv_sqrt2;
            basis.elements.push_back(std::move(g));
        }
    for (int m = 1; m < k; ++m)
        for (int n = 0; n < m; ++n) {
            ComplexMatrix g(k, k);
            g(m, n) = cplx(0.0, inv_sqrt2);
            g(n, m) = cplx(0.0, -inv_sqrt2);
            basis.elements.push_back(std::move(g));
        }

    return basis;
}

} // namespace qdiv
