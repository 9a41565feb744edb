#pragma once

#include <vector>

#include "qdiv/canonical.hpp"
#include "qdiv/complex_matrix.hpp"
#include "qdiv/eig.hpp"
#include "qdiv/superop.hpp"

namespace qdiv {

// Boson-boson pure-dephasing model. Units hbar = k_B = 1.
struct BathMode {
    double omega = 0.0;     // mode energy, > 0
    double coupling = 0.0;  // lambda_n
};

struct BathSpec {
    std::vector<BathMode> modes;
    double temperature = 0.0;

    BathSpec(std::vector<BathMode> m, double t);
};

// eta(t) = sum_n log[(1 - a_n)/(1 - a_n e^{-i lambda_n t})], a_n = e^{-omega_n/T}.
// Per-mode principal logs; the arguments stay in the right half plane.
cplx eta(const BathSpec& bath, double t);

// mu_j(t) = d/dt eta(j t) = sum_n (-i j lambda_n a_n e^{-i lambda_n j t})/(1 - a_n e^{-i lambda_n j t})
cplx mu(const BathSpec& bath, int j, double t);

struct DephasingFamily {
    BathSpec bath;
    int levels = 0;                 // truncation k >= 2
    std::vector<double> grid;       // ascending from 0

    DephasingFamily(BathSpec b, int k, std::vector<double> g);
};

// k-level map multiplying matrix element (m,n) by e^{eta((m-n)t)}.
Superoperator dephasing_map(const DephasingFamily& fam, double t);

MapFamily dephasing_map_family(const DephasingFamily& fam);

// Generator snapshot rho_dot = sum_{mn} mu_{m-n}(t) |m><m| rho |n><n|.
GeneratorSpec dephasing_generator(const DephasingFamily& fam, double t);

// d^B_k: the (k-1)x(k-1) decoherence block over the diagonal Gell-Mann family.
ComplexMatrix decoherence_block(const DephasingFamily& fam, double t);

// D_k: Hermitian Toeplitz with T_j = -mu_{j+1} + 2 mu_j - mu_{j-1}, entry (r,c) = T_{r-c}.
ComplexMatrix toeplitz_D(const DephasingFamily& fam, double t);
ComplexMatrix toeplitz_D(const BathSpec& bath, int k, double t);

// V_k = diag(c_1..c_{k-1}) * lower-triangular-ones * diag(1..k-1),
// c_l = 1/sqrt(l(l+1)); satisfies d^B_k = V_k D_k V_k^dagger.
ComplexMatrix congruence_V(int k);

struct LevelVerdict {
    int level = 0;
    PsdVerdict verdict;
};

// psd verdicts of D_2..D_k at time t. All levels share the tolerance scale
// of the largest section so the hierarchy implication is exact.
std::vector<LevelVerdict> hierarchy_scan(const DephasingFamily& fam, double t, double tol = 1e-10);

struct FourierSymbol {
    double real_part = 0.0;
    cplx value;
};

// Partial sum sum_{j=-K}^{K} mu_j(t) e^{i j lambda}.
FourierSymbol fourier_symbol(const DephasingFamily& fam, double t, double lambda, int terms);

} // namespace qdiv
