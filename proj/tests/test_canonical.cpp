#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "common.hpp"
#include "qdiv/reference.hpp"

using namespace qdiv;

namespace {

// independent evaluation of c_pq = sum_k Tr[G_p A_k] Tr[G_q B_k^dagger]
ComplexMatrix coefficients_by_hand(const GeneratorSpec& g, const OperatorBasis& basis) {
    const int nb = static_cast<int>(basis.elements.size());
    ComplexMatrix c(nb, nb);
    for (const auto& [a, b] : g.terms)
        for (int p = 0; p < nb; ++p)
            for (int q = 0; q < nb; ++q) {
                cplx ta = 0.0, tb = 0.0;
                for (int i = 0; i < g.dim; ++i)
                    for (int j = 0; j < g.dim; ++j) {
                        ta += basis.elements[p](i, j) * a(j, i);
                        tb += basis.elements[q](i, j) * std::conj(b(i, j));
                    }
                c(p, q) += ta * tb;
            }
    return c;
}

// random orthonormal Hermitian traceless basis: rotate the Gell-Mann
// traceless family by a random real orthogonal matrix
OperatorBasis rotated_basis(Rng& rng, int k) {
    const OperatorBasis gm = gell_mann_basis(k);
    const int nb = k * k - 1;

    // Gram-Schmidt over a random real matrix
    std::vector<std::vector<double>> o(nb, std::vector<double>(nb));
    for (auto& row : o)
        for (double& v : row) v = rng.normal();
    for (int c = 0; c < nb; ++c) {
        for (int prev = 0; prev < c; ++prev) {
            double proj = 0.0;
            for (int r = 0; r < nb; ++r) proj += o[r][prev] * o[r][c];
            for (int r = 0; r < nb; ++r) o[r][c] -= proj * o[r][prev];
        }
        double nrm = 0.0;
        for (int r = 0; r < nb; ++r) nrm += o[r][c] * o[r][c];
        nrm = std::sqrt(nrm);
        for (int r = 0; r < nb; ++r) o[r][c] /= nrm;
    }

    OperatorBasis out;
    out.dim = k;
    out.elements.push_back(gm.elements[0]);
    for (int p = 0; p < nb; ++p) {
        ComplexMatrix g = ComplexMatrix::zero(k, k);
        for (int q = 0; q < nb; ++q) g += cplx(o[q][p]) * gm.elements[q + 1];
        out.elements.push_back(std::move(g));
    }
    return out;
}

} // namespace

TEST_CASE("gell_mann_basis: qubit representation") {
    const OperatorBasis b = gell_mann_basis(2);
    REQUIRE(b.elements.size() == 4);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(max_abs_diff(b.elements[0], cplx(s) * ComplexMatrix::identity(2)) <= 1e-15);
    CHECK(max_abs_diff(b.elements[1], cplx(s) * test::sigma_z()) <= 1e-15);
    CHECK(max_abs_diff(b.elements[2], cplx(s) * test::sigma_x()) <= 1e-15);
    CHECK(max_abs_diff(b.elements[3], cplx(s) * test::sigma_y()) <= 1e-15);
}

TEST_CASE("gell_mann_basis: errors and structure") {
    CHECK_THROWS_AS((void)gell_mann_basis(1), Error);

    for (int k : {2, 3, 5}) {
        const OperatorBasis b = gell_mann_basis(k);
        REQUIRE(static_cast<int>(b.elements.size()) == k * k);
        for (size_t p = 1; p < b.elements.size(); ++p)
            CHECK(std::abs(b.elements[p].trace()) <= 1e-15);
        // positions 1..k-1 are the diagonal family
        for (int l = 1; l < k; ++l) {
            const ComplexMatrix& g = b.elements[l];
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if (i != j) CHECK(std::abs(g(i, j)) == 0.0);
            CHECK(g(l, l).real() == doctest::Approx(-l / std::sqrt(double(l) * (l + 1))));
        }
        for (const auto& g : b.elements) CHECK(g.herm_deviation() == 0.0);
    }
}

TEST_CASE("gell_mann_basis: Gram matrix is the identity (k=4)") {
    const OperatorBasis b = gell_mann_basis(4);
    for (size_t p = 0; p < b.elements.size(); ++p)
        for (size_t q = 0; q < b.elements.size(); ++q) {
            const cplx ip = (b.elements[p] * b.elements[q]).trace();
            CHECK(std::abs(ip - (p == q ? cplx(1.0) : cplx(0.0))) <= 1e-12);
        }
}

TEST_CASE("decoherence_matrix: qubit dephasing has a single Gamma entry") {
    const double gamma = 0.7;
    const GeneratorSpec g = test::qubit_dephasing(gamma);
    const OperatorBasis basis = gell_mann_basis(2);
    const DecoherenceMatrix d = decoherence_matrix(g, basis);
    REQUIRE(d.dim_basis == 3);
    CHECK(std::abs(d.mat(0, 0) - cplx(gamma)) <= 1e-14);
    for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q)
            if (p != 0 || q != 0) CHECK(std::abs(d.mat(p, q)) <= 1e-14);

    // cross-check the whole coefficient matrix against the hand evaluation
    const ComplexMatrix by_hand = coefficients_by_hand(g, basis);
    CHECK(max_abs_diff(bilinear_coefficients(g, basis), by_hand) <= 1e-13);
}

TEST_CASE("decoherence_matrix: zero generator") {
    GeneratorSpec g;
    g.dim = 3;
    const DecoherenceMatrix d = decoherence_matrix(g, gell_mann_basis(3));
    CHECK(d.mat.max_abs() == 0.0);
}

TEST_CASE("decoherence_matrix: amplitude damping spectrum {gamma, 0, 0}") {
    const double gamma = 1.3;
    const GeneratorSpec g = test::amplitude_damping(gamma);
    const DecoherenceMatrix d = decoherence_matrix(g, gell_mann_basis(2));
    const auto ev = ref::jacobi_eigvals(d.mat);
    CHECK(std::abs(ev[0]) <= 1e-13);
    CHECK(std::abs(ev[1]) <= 1e-13);
    CHECK(ev[2] == doctest::Approx(gamma).epsilon(1e-12));
}

TEST_CASE("canonical_form: zero generator") {
    GeneratorSpec g;
    g.dim = 2;
    const CanonicalForm f = canonical_form(g);
    CHECK(f.hamiltonian.max_abs() == 0.0);
    for (double r : f.rates) CHECK(r == 0.0);
}

TEST_CASE("canonical_form: amplitude damping recovers sigma_minus") {
    const double gamma = 0.9;
    const CanonicalForm f = canonical_form(test::amplitude_damping(gamma));
    REQUIRE(f.rates.size() == 3);
    CHECK(f.rates[2] == doctest::Approx(gamma).epsilon(1e-12));
    CHECK(std::abs(f.rates[0]) <= 1e-13);
    CHECK(std::abs(f.rates[1]) <= 1e-13);

    // the rate-gamma Lindblad operator is sigma_minus up to a phase
    const ComplexMatrix& l = f.lindblad_ops[2];
    CHECK(std::abs(std::abs(l(0, 1)) - 1.0) <= 1e-12);
    CHECK(std::abs(l(0, 0)) <= 1e-12);
    CHECK(std::abs(l(1, 0)) <= 1e-12);
    CHECK(std::abs(l(1, 1)) <= 1e-12);

    // reconstructed generator equals the input
    CHECK(test::superop_diff(assemble(f, 2), test::amplitude_damping(gamma).superop()) <= 1e-12);
}

TEST_CASE("canonical_form: round trip over seeded generators") {
    Rng rng(301);
    for (int trial = 0; trial < 20; ++trial) {
        const int dim = rng.uniform_int(2, 5);
        const GeneratorSpec g = test::random_generator(rng, dim);
        REQUIRE(hermiticity_preservation_deviation(g.superop()) <= 1e-10);

        const CanonicalForm f = canonical_form(g);
        CHECK(f.hamiltonian.herm_deviation() <= 1e-12);
        CHECK(test::superop_diff(assemble(f, dim), g.superop()) <= 1e-9);

        // L_p are traceless and orthonormal
        for (size_t p = 0; p < f.lindblad_ops.size(); ++p) {
            CHECK(std::abs(f.lindblad_ops[p].trace()) <= 1e-10);
            for (size_t q = p; q < f.lindblad_ops.size(); ++q) {
                const cplx ip = (f.lindblad_ops[p].adjoint() * f.lindblad_ops[q]).trace();
                CHECK(std::abs(ip - (p == q ? cplx(1.0) : cplx(0.0))) <= 1e-10);
            }
        }
    }
}

TEST_CASE("rates: basis independence and trace identity") {
    Rng rng(302);
    for (int trial = 0; trial < 10; ++trial) {
        const int dim = rng.uniform_int(2, 4);
        const GeneratorSpec g = test::random_generator(rng, dim);
        const OperatorBasis gm = gell_mann_basis(dim);
        const OperatorBasis rot = rotated_basis(rng, dim);

        const DecoherenceMatrix d1 = decoherence_matrix(g, gm);
        const DecoherenceMatrix d2 = decoherence_matrix(g, rot);
        const auto r1 = herm_eigvals(d1.mat);
        const auto r2 = herm_eigvals(d2.mat);
        REQUIRE(r1.size() == r2.size());
        for (size_t i = 0; i < r1.size(); ++i) CHECK(std::abs(r1[i] - r2[i]) <= 1e-9);

        double sum = 0.0;
        for (double r : r1) sum += r;
        const double tr = d1.mat.trace().real();
        CHECK(std::abs(sum - tr) <= 1e-10 * std::max(1.0, std::abs(tr)));
    }
}

TEST_CASE("generator input paths agree: terms vs raw superoperator") {
    Rng rng(303);
    for (int trial = 0; trial < 8; ++trial) {
        const int dim = rng.uniform_int(2, 4);
        const GeneratorSpec g = test::random_generator(rng, dim);
        const OperatorBasis basis = gell_mann_basis(dim);
        const ComplexMatrix c_terms = bilinear_coefficients(g, basis);
        const ComplexMatrix c_raw = bilinear_coefficients(g.superop(), basis);
        CHECK(max_abs_diff(c_terms, c_raw) <= 1e-10 * std::max(1.0, c_terms.max_abs()));

        const CanonicalForm f1 = canonical_form(g);
        const CanonicalForm f2 = canonical_form(g.superop());
        for (size_t i = 0; i < f1.rates.size(); ++i) CHECK(std::abs(f1.rates[i] - f2.rates[i]) <= 1e-10);
        CHECK(max_abs_diff(f1.hamiltonian, f2.hamiltonian) <= 1e-10);
    }
}

TEST_CASE("is_divisible_generator") {
    CHECK(is_divisible_generator(test::amplitude_damping(0.8)).is_psd);
    CHECK_FALSE(is_divisible_generator(test::qubit_dephasing(-0.3)).is_psd);
    CHECK(is_divisible_generator(test::qubit_dephasing(0.3)).is_psd);

    // verdict via rates equals verdict via the PSD check
    Rng rng(304);
    for (int trial = 0; trial < 10; ++trial) {
        const int dim = rng.uniform_int(2, 4);
        const GeneratorSpec g = test::random_generator(rng, dim, trial % 2 == 0);
        const PsdVerdict v = is_divisible_generator(g);
        const CanonicalForm f = canonical_form(g);
        const bool via_rates = f.rates.front() >= -v.tolerance_used;
        CHECK(via_rates == v.is_psd);
    }
}

TEST_CASE("hermiticity preservation validator flags a violator") {
    GeneratorSpec g;
    g.dim = 2;
    g.terms.emplace_back(test::sigma_minus(), ComplexMatrix::identity(2));  // rho -> sigma_minus rho
    CHECK(hermiticity_preservation_deviation(g.superop()) > 0.1);
    CHECK(hermiticity_preservation_deviation(test::amplitude_damping(1.0).superop()) <= 1e-12);
}
