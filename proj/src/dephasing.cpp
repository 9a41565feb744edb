#include "qdiv/dephasing.hpp"

#include <cmath>

namespace qdiv {

BathSpec::BathSpec(std::vector<BathMode> m, double t) : modes(std::move(m)), temperature(t) {
    require(!modes.empty(), ErrorKind::InvalidArgument, "BathSpec: need at least one mode");
    require(temperature > 0.0, ErrorKind::InvalidArgument, "BathSpec: temperature must be positive");
    for (const auto& mode : modes)
        require(mode.omega > 0.0, ErrorKind::InvalidArgument, "BathSpec: mode energies must be positive");
}

cplx eta(const BathSpec& bath, double t) {
    cplx sum = 0.0;
    for (const auto& mode : bath.modes) {
        const double a = std::exp(-mode.omega / bath.temperature);
        const cplx z = std::polar(1.0, -mode.coupling * t);
        sum += std::log(cplx(1.0 - a)) - std::log(cplx(1.0) - a * z);
    }
    return sum;
}

cplx mu(const BathSpec& bath, int j, double t) {
    if (j == 0) return 0.0;
    cplx sum = 0.0;
    for (const auto& mode : bath.modes) {
        const double a = std::exp(-mode.omega / bath.temperature);
        const cplx z = std::polar(a, -mode.coupling * j * t);
        sum += cplx(0.0, -j * mode.coupling) * z / (cplx(1.0) - z);
    }
    return sum;
}

DephasingFamily::DephasingFamily(BathSpec b, int k, std::vector<double> g)
    : bath(std::move(b)), levels(k), grid(std::move(g)) {
    require(levels >= 2, ErrorKind::DimensionTooSmall, "DephasingFamily: need levels >= 2");
}

Superoperator dephasing_map(const DephasingFamily& fam, double t) {
    require(t >= 0.0, ErrorKind::TimeOutOfRange, "dephasing_map: t must be >= 0");
    const int k = fam.levels;
    ComplexMatrix m = ComplexMatrix::zero(k * k, k * k);
    for (int row = 0; row < k; ++row)
        for (int col = 0; col < k; ++col) {
            const int v = col * k + row;  // vec index of |row><col|
            m(v, v) = row == col ? cplx(1.0) : std::exp(eta(fam.bath, (row - col) * t));
        }
    return Superoperator(k, std::move(m));
}

MapFamily dephasing_map_family(const DephasingFamily& fam) {
    std::vector<Superoperator> maps;
    maps.reserve(fam.grid.size());
    for (double t : fam.grid) maps.push_back(dephasing_map(fam, t));
    return MapFamily::create(fam.levels, fam.grid, std::move(maps));
}

GeneratorSpec dephasing_generator(const DephasingFamily& fam, double t) {
    const int k = fam.levels;
    GeneratorSpec g;
    g.dim = k;
    for (int m = 0; m < k; ++m)
        for (int n = 0; n < k; ++n) {
            if (m == n) continue;
            const cplx rate = mu(fam.bath, m - n, t);
            ComplexMatrix a(k, k), b(k, k);
            a(m, m) = rate;
            b(n, n) = 1.0;  // B^dagger = |n><n|
            g.terms.emplace_back(std::move(a), std::move(b));
        }
    return g;
}

ComplexMatrix decoherence_block(const DephasingFamily& fam, double t) {
    const int k = fam.levels;

    // diagonal entries of the G^d family: g_l[m] = <m|G_l|m>
    std::vector<std::vector<double>> gd(k);
    for (int l = 1; l < k; ++l) {
        std::vector<double> g(k, 0.0);
        const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
        for (int i = 0; i < l; ++i) g[i] = norm;
        g[l] = -static_cast<double>(l) * norm;
        gd[l] = std::move(g);
    }

    std::vector<cplx> mus(2 * k - 1);
    for (int j = -(k - 1); j <= k - 1; ++j) mus[j + k - 1] = mu(fam.bath, j, t);

    ComplexMatrix d(k - 1, k - 1);
    for (int p = 1; p < k; ++p)
        for (int q = 1; q < k; ++q) {
            cplx s = 0.0;
            for (int m = 0; m < k; ++m) {
                if (gd[p][m] == 0.0) continue;
                for (int n = 0; n < k; ++n) {
                    if (gd[q][n] == 0.0 || m == n) continue;
                    s += mus[m - n + k - 1] * gd[p][m] * gd[q][n];
                }
            }
            d(p - 1, q - 1) = s;
        }
    return d;
}

ComplexMatrix toeplitz_D(const BathSpec& bath, int k, double t) {
    require(k >= 2, ErrorKind::DimensionTooSmall, "toeplitz_D: need k >= 2");
    std::vector<cplx> tj(2 * k - 3);  // T_j for j in [-(k-2) .. k-2]
    for (int j = -(k - 2); j <= k - 2; ++j)
        tj[j + k - 2] = -mu(bath, j + 1, t) + 2.0 * mu(bath, j, t) - mu(bath, j - 1, t);

    ComplexMatrix d(k - 1, k - 1);
    for (int r = 0; r < k - 1; ++r)
        for (int c = 0; c < k - 1; ++c) d(r, c) = tj[r - c + k - 2];
    return d;
}

ComplexMatrix toeplitz_D(const DephasingFamily& fam, double t) {
    return toeplitz_D(fam.bath, fam.levels, t);
}

ComplexMatrix congruence_V(int k) {
    require(k >= 2, ErrorKind::DimensionTooSmall, "congruence_V: need k >= 2");
    ComplexMatrix v(k - 1, k - 1);
    for (int r = 0; r < k - 1; ++r) {
        const double c_l = 1.0 / std::sqrt(static_cast<double>(r + 1) * (r + 2));
        for (int c = 0; c <= r; ++c) v(r, c) = c_l * (c + 1);
    }
    return v;
}

std::vector<LevelVerdict> hierarchy_scan(const DephasingFamily& fam, double t, double tol) {
    const int k = fam.levels;
    const ComplexMatrix dk = toeplitz_D(fam, t);

    // shared tolerance scale: with one threshold for every section, Cauchy
    // interlacing makes verdict_m => verdict_n (n <= m) exact
    const std::vector<double> full_ev = herm_eigvals(hermitize(dk));
    const double lam_scale = std::max(std::abs(full_ev.front()), std::abs(full_ev.back()));
    const double threshold = tol * std::max(1.0, lam_scale);

    std::vector<LevelVerdict> out;
    out.reserve(k - 1);
    for (int level = 2; level <= k; ++level) {
        const ComplexMatrix section = leading_principal_submatrix(dk, level - 1);
        const std::vector<double> ev = herm_eigvals(hermitize(section));
        LevelVerdict v;
        v.level = level;
        v.verdict.min_eigenvalue = ev.front();
        v.verdict.tolerance_used = threshold;
        v.verdict.is_psd = ev.front() >= -threshold;
        out.push_back(v);
    }
    return out;
}

FourierSymbol fourier_symbol(const DephasingFamily& fam, double t, double lambda, int terms) {
    require(terms >= 1, ErrorKind::InvalidArgument, "fourier_symbol: need at least one term");
    cplx sum = 0.0;
    for (int j = -terms; j <= terms; ++j) {
        if (j == 0) continue;
        sum += mu(fam.bath, j, t) * std::polar(1.0, j * lambda);
    }
    return {sum.real(), sum};
}

} // namespace qdiv
