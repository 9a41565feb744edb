#pragma once

#include <vector>

#include "qdiv/canonical.hpp"
#include "qdiv/complex_matrix.hpp"
#include "qdiv/superop.hpp"

namespace qdiv {

// Scalar sampled on a time grid, linearly interpolated. A single sample
// means a constant. Evaluation outside the sampled range throws
// TimeOutOfRange.
struct RateTable {
    std::vector<double> times;
    std::vector<double> values;

    static RateTable constant(double v) { return {{0.0}, {v}}; }
    double at(double t) const;
};

// Density matrix sampled on a time grid. Linear interpolation can leave
// the PSD trace-1 cone by O(spacing^2), so interpolated values are
// re-projected (eigenvalue clipping + renormalization).
struct TargetTable {
    std::vector<double> times;
    std::vector<ComplexMatrix> values;

    static TargetTable constant(ComplexMatrix v) { return {{0.0}, {std::move(v)}}; }
    ComplexMatrix at(double t) const;
};

// N-level decay model: rates gamma_k and target states rho^(k) supported
// on the first k levels, k = 1..N-1. Rates may be negative.
struct DecayModelSpec {
    int levels = 0;                    // N
    std::vector<RateTable> rates;      // index k-1
    std::vector<TargetTable> targets;  // index k-1

    static DecayModelSpec create(int levels, std::vector<RateTable> rates,
                                 std::vector<TargetTable> targets);
};

// Generator realizing gamma_k(-{|k><k|, rho}/2 + <k|rho|k> rho^(k)) term by
// term from the matrix entries of rho^(k); no spectral decomposition.
GeneratorSpec decay_generator(const DecayModelSpec& spec, double t);

// Same generator through the spectral decomposition of each rho^(k):
// jump operators |k_j><k| weighted by p_j^(k) gamma_k.
GeneratorSpec canonical_decay(const DecayModelSpec& spec, double t);

struct PropagationResult {
    MapFamily family;
    std::vector<ComplexMatrix> states;
};

// Piecewise-constant propagation: per step the generator at the midpoint
// is exponentiated and composed onto the family. Demands ||L|| dt <= 5.
PropagationResult propagate(const DecayModelSpec& spec, const ComplexMatrix& rho0,
                            const std::vector<double>& grid);

struct CascadeState {
    std::vector<double> probs;
};

// Closed ODE for the diagonal probabilities (classic RK4 on the grid).
std::vector<CascadeState> cascade_probs(const DecayModelSpec& spec, const CascadeState& p0,
                                        const std::vector<double>& grid);

// Restriction of the model to the first n levels (rates k <= n-1).
DecayModelSpec truncated(const DecayModelSpec& spec, int n);

// Generator of the subdynamics on L_n; divisibility depends only on
// gamma_1..gamma_{n-1}.
GeneratorSpec subdynamics_generator(const DecayModelSpec& spec, int n, double t);

} // namespace qdiv
