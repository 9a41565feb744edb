#pragma once

#include <utility>
#include <vector>

#include "qdiv/complex_matrix.hpp"
#include "qdiv/eig.hpp"

namespace qdiv {

// Operators are vectorized by stacking columns: vec(X)[j*d + i] = X(i,j),
// and rho -> A rho B is represented by (B^T kron A). Everything in this
// module is stated against that convention.

std::vector<cplx> vec(const ComplexMatrix& x);
ComplexMatrix unvec(const std::vector<cplx>& v, int dim);

struct Superoperator {
    int dim = 0;          // Hilbert-space dimension d
    ComplexMatrix mat;    // d^2 x d^2

    Superoperator() = default;
    Superoperator(int d, ComplexMatrix m);

    static Superoperator identity(int d);
    // rho -> sum_k A_k rho B_k^dagger
    static Superoperator from_terms(int d, const std::vector<std::pair<ComplexMatrix, ComplexMatrix>>& ab);
    static Superoperator from_kraus(const std::vector<ComplexMatrix>& kraus);
    // rho -> U rho U^dagger
    static Superoperator conjugation(const ComplexMatrix& u);

    ComplexMatrix apply(const ComplexMatrix& x) const;
};

Superoperator operator*(const Superoperator& a, const Superoperator& b);

struct ChoiMatrix {
    int dim = 0;
    ComplexMatrix mat;    // d^2 x d^2
};

// C[(i,k),(j,l)] = <i| S(|k><l|) |j>, row index i*d+k. S is CP iff C >= 0.
ChoiMatrix choi(const Superoperator& s);

struct CptpVerdict {
    bool cp = false;
    bool tp = false;
    double choi_min_eig = 0.0;
    double tp_deviation = 0.0;
};

// cp via psd_check(choi, tol); tp iff trace(S(|k><l|)) = delta_kl within tol.
CptpVerdict is_cptp(const Superoperator& s, double tol = 1e-8);

// H_{a1} = span of the first sub_dim computational basis vectors.
struct SubspaceSplit {
    int total_dim = 0;
    int sub_dim = 0;

    SubspaceSplit(int total, int sub);
};

struct CompressedBlocks {
    Superoperator aa;     // re-indexed to a sub_dim-level superoperator
    ComplexMatrix ap;     // sub x comp
    ComplexMatrix pa;     // comp x sub
    ComplexMatrix pp;     // comp x comp
};

CompressedBlocks compress(const Superoperator& s, const SubspaceSplit& split);

struct MapFamily {
    int dim = 0;
    std::vector<double> times;        // strictly increasing, times[0] = 0
    std::vector<Superoperator> maps;  // maps[0] = identity within 1e-12

    static MapFamily create(int dim, std::vector<double> times, std::vector<Superoperator> maps);
    int size() const { return static_cast<int>(maps.size()); }
};

// The operator subspace is invariant iff every compressed map is
// trace-preserving; checked together with the pa block vanishing, at
// every grid time, within tol.
bool is_invariant_subspace(const MapFamily& f, const SubspaceSplit& split, double tol);

// Inverse of an upper-block-triangular superoperator assembled from
// aa^-1, -aa^-1 ap pp^-1 and pp^-1; verified against S to 1e-8.
Superoperator block_inverse(const Superoperator& s, const SubspaceSplit& split);

// Q(t_{i2}, t_{i1}) = E(t_{i2},0) E^{-1}(t_{i1},0)
Superoperator intermediate_map(const MapFamily& f, int i1, int i2);

struct IntervalVerdict {
    int i1 = 0;
    int i2 = 0;
    bool cp = false;
    bool tp = false;
    double choi_min_eig = 0.0;
    double tp_deviation = 0.0;
};

struct DivisibilityReport {
    bool divisible = false;
    std::vector<IntervalVerdict> intervals;
};

// Consecutive grid intervals by default; pairwise checks all i1 < i2.
DivisibilityReport divisibility_scan(const MapFamily& f, double tol = 1e-8, bool pairwise = false);

// || E_aa(t2,0) - Q_aa(t2,t1) E_aa(t1,0) ||_max
double composition_gap(const MapFamily& f, const SubspaceSplit& split, int i1, int i2);

constexpr double kCondThreshold = 1e12;

} // namespace qdiv
