#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "qdiv/complex_matrix.hpp"

namespace qdiv {

// Seeded generator for reproducible sampled tests and scans.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double normal() { return normal_(engine_); }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform_(engine_); }
    int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

    cplx cnormal() { return cplx(normal(), normal()) * std::sqrt(0.5); }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
    std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

ComplexMatrix random_matrix(Rng& rng, int rows, int cols);
ComplexMatrix random_hermitian(Rng& rng, int n);
ComplexMatrix random_hermitian_psd(Rng& rng, int n);
ComplexMatrix random_density(Rng& rng, int n);
ComplexMatrix random_unitary(Rng& rng, int n);

// Kraus set normalized so that sum_k A_k^dagger A_k = identity.
std::vector<ComplexMatrix> random_kraus_set(Rng& rng, int dim, int count);

} // namespace qdiv
