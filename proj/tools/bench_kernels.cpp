// Timing comparison of the production kernels against the serial
// reference implementations. Run with OMP_NUM_THREADS set to taste.
#include <chrono>
#include <cstdio>
#include <functional>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qdiv/eig.hpp"
#include "qdiv/expm.hpp"
#include "qdiv/random.hpp"
#include "qdiv/reference.hpp"

using namespace qdiv;

namespace {

double time_ms(const std::function<void()>& fn, int reps) {
    fn();  // warmup
    const auto start = std::chrono::steady_clock::now();
    for (int r = 0; r < reps; ++r) fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count() / reps;
}

void row(const char* name, int n, double serial_ms, double kernel_ms, double diff) {
    std::printf("%-12s %5d %12.3f %12.3f %9.2fx   %.3e\n", name, n, serial_ms, kernel_ms,
                serial_ms / kernel_ms, diff);
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP\n");
#endif
    std::printf("%-12s %5s %12s %12s %10s   %s\n", "kernel", "n", "serial[ms]", "kernel[ms]", "speedup",
                "max|diff|");

    Rng rng(20240901);

    for (int n : {64, 128, 256}) {
        const ComplexMatrix a = random_matrix(rng, n, n);
        const ComplexMatrix b = random_matrix(rng, n, n);
        const int reps = n <= 128 ? 5 : 2;
        ComplexMatrix ref_out(1, 1), out(1, 1);
        const double t_ref = time_ms([&] { ref_out = ref::matmul_naive(a, b); }, reps);
        const double t_ker = time_ms([&] { out = matmul(a, b); }, reps);
        row("matmul", n, t_ref, t_ker, max_abs_diff(ref_out, out));
    }

    for (int n : {32, 64, 128}) {
        const ComplexMatrix h = random_hermitian(rng, n);
        const int reps = n <= 64 ? 3 : 1;
        std::vector<double> ev_ref, ev;
        const double t_ref = time_ms([&] { ev_ref = ref::jacobi_eigvals(h); }, reps);
        const double t_ker = time_ms([&] { ev = herm_eigvals(h); }, reps);
        double diff = 0.0;
        for (size_t i = 0; i < ev.size(); ++i) diff = std::max(diff, std::abs(ev[i] - ev_ref[i]));
        row("herm_eig", n, t_ref, t_ker, diff);
    }

    for (int n : {32, 64, 128}) {
        ComplexMatrix a = random_matrix(rng, n, n);
        a *= cplx(1.0 / n);  // keep the Taylor reference in its accurate regime
        const int reps = 3;
        ComplexMatrix ref_out(1, 1), out(1, 1);
        const double t_ref = time_ms([&] { ref_out = ref::expm_taylor(a); }, reps);
        const double t_ker = time_ms([&] { out = expm(a); }, reps);
        row("expm", n, t_ref, t_ker, max_abs_diff(ref_out, out));
    }

    return 0;
}
