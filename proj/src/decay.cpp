#include "qdiv/decay.hpp"

#include <algorithm>
#include <cmath>

#include "qdiv/eig.hpp"
#include "qdiv/expm.hpp"

namespace qdiv {

namespace {

size_t interval_index(const std::vector<double>& times, double t) {
    require(!times.empty(), ErrorKind::InvalidArgument, "sample table is empty");
    const double slack = 1e-12 * std::max(1.0, std::abs(times.back()));
    require(t >= times.front() - slack && t <= times.back() + slack, ErrorKind::TimeOutOfRange,
            "evaluation time outside the sampled range");
    size_t hi = 1;
    while (hi < times.size() - 1 && times[hi] < t) ++hi;
    return hi;
}

} // namespace

double RateTable::at(double t) const {
    if (times.size() == 1) return values.front();
    const size_t hi = interval_index(times, t);
    const double w = (t - times[hi - 1]) / (times[hi] - times[hi - 1]);
    return (1.0 - w) * values[hi - 1] + w * values[hi];
}

ComplexMatrix TargetTable::at(double t) const {
    if (times.size() == 1) return values.front();
    const size_t hi = interval_index(times, t);
    const double w = (t - times[hi - 1]) / (times[hi] - times[hi - 1]);
    ComplexMatrix mixed = cplx(1.0 - w) * values[hi - 1] + cplx(w) * values[hi];
    if (w == 0.0 || w == 1.0) return mixed;

    // re-project onto the PSD trace-1 cone
    const HermEig eig = herm_eig(hermitize(mixed));
    const int n = mixed.rows();
    double total = 0.0;
    std::vector<double> clipped(n);
    for (int i = 0; i < n; ++i) {
        clipped[i] = std::max(eig.eigenvalues[i], 0.0);
        total += clipped[i];
    }
    require(total > 0.0, ErrorKind::ModelError, "TargetTable: interpolated state has no positive weight");
    ComplexMatrix out = ComplexMatrix::zero(n, n);
    for (int e = 0; e < n; ++e) {
        const double p = clipped[e] / total;
        if (p == 0.0) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out(i, j) += p * eig.eigenvectors(i, e) * std::conj(eig.eigenvectors(j, e));
    }
    return out;
}

DecayModelSpec DecayModelSpec::create(int levels, std::vector<RateTable> rates,
                                      std::vector<TargetTable> targets) {
    require(levels >= 2, ErrorKind::DimensionTooSmall, "DecayModelSpec: need N >= 2");
    require(static_cast<int>(rates.size()) == levels - 1 &&
                static_cast<int>(targets.size()) == levels - 1,
            ErrorKind::DimensionMismatch, "DecayModelSpec: need N-1 rates and targets");

    for (int k = 1; k < levels; ++k) {
        for (const auto& rho : targets[k - 1].values) {
            require(rho.rows() == levels && rho.cols() == levels, ErrorKind::DimensionMismatch,
                    "DecayModelSpec: target states must be N x N");
            require(rho.herm_deviation() <= 1e-10 * std::max(1.0, rho.max_abs()), ErrorKind::ModelError,
                    "DecayModelSpec: target state not Hermitian");
            require(std::abs(rho.trace() - cplx(1.0)) <= 1e-10, ErrorKind::ModelError,
                    "DecayModelSpec: target state trace must be 1");
            const PsdVerdict psd = psd_check(rho, 1e-8);
            require(psd.is_psd, ErrorKind::ModelError, "DecayModelSpec: target state not PSD");
            for (int i = 0; i < levels; ++i)
                for (int j = 0; j < levels; ++j)
                    if (i >= k || j >= k)
                        require(std::abs(rho(i, j)) <= 1e-12, ErrorKind::ModelError,
                                "DecayModelSpec: target state leaks outside its subspace");
        }
    }

    DecayModelSpec s;
    s.levels = levels;
    s.rates = std::move(rates);
    s.targets = std::move(targets);
    return s;
}

GeneratorSpec decay_generator(const DecayModelSpec& spec, double t) {
    const int n = spec.levels;
    GeneratorSpec g;
    g.dim = n;

    for (int k = 1; k < n; ++k) {
        const double gamma = spec.rates[k - 1].at(t);
        if (gamma == 0.0) continue;
        const ComplexMatrix rho_k = spec.targets[k - 1].at(t);

        // -(gamma/2) {|k><k|, rho}
        ComplexMatrix proj(n, n);
        proj(k, k) = 1.0;
        g.terms.emplace_back(cplx(-0.5 * gamma) * proj, ComplexMatrix::identity(n));
        g.terms.emplace_back(cplx(-0.5 * gamma) * ComplexMatrix::identity(n), proj);

        // gamma <k|rho|k> rho^(k), entrywise: rho^(k)_{ab} |a><k| rho |k><b|
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b) {
                const cplx r = rho_k(a, b);
                if (r == cplx(0.0)) continue;
                ComplexMatrix lhs(n, n), rhs(n, n);
                lhs(a, k) = gamma * r;
                rhs(b, k) = 1.0;  // B^dagger = |k><b|
                g.terms.emplace_back(std::move(lhs), std::move(rhs));
            }
    }
    return g;
}

GeneratorSpec canonical_decay(const DecayModelSpec& spec, double t) {
    const int n = spec.levels;
    GeneratorSpec g;
    g.dim = n;
    const ComplexMatrix id = ComplexMatrix::identity(n);

    for (int k = 1; k < n; ++k) {
        const double gamma = spec.rates[k - 1].at(t);
        if (gamma == 0.0) continue;
        const ComplexMatrix rho_k = spec.targets[k - 1].at(t);
        const HermEig eig = herm_eig(rho_k);

        for (int j = 0; j < n; ++j) {
            const double p = eig.eigenvalues[j];
            if (p == 0.0) continue;
            const double w = p * gamma;

            // sigma^- = |k_j><k|
            ComplexMatrix jump(n, n);
            for (int i = 0; i < n; ++i) jump(i, k) = eig.eigenvectors(i, j);

            const ComplexMatrix num = jump.adjoint() * jump;  // |k><k|
            g.terms.emplace_back(cplx(w) * jump, jump);
            g.terms.emplace_back(cplx(-0.5 * w) * num, id);
            g.terms.emplace_back(id, cplx(-0.5 * w) * num);
        }
    }
    return g;
}

PropagationResult propagate(const DecayModelSpec& spec, const ComplexMatrix& rho0,
                            const std::vector<double>& grid) {
    const int n = spec.levels;
    require(rho0.rows() == n && rho0.cols() == n, ErrorKind::DimensionMismatch,
            "propagate: initial state dimension mismatch");

    std::vector<Superoperator> maps;
    maps.reserve(grid.size());
    maps.push_back(Superoperator::identity(n));

    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        const double dt = grid[i + 1] - grid[i];
        const double t_mid = 0.5 * (grid[i] + grid[i + 1]);
        const Superoperator gen = decay_generator(spec, t_mid).superop();
        require(gen.mat.norm_one() * dt <= 5.0, ErrorKind::StepTooLarge,
                "propagate: ||L|| dt > 5, refine the grid");
        ComplexMatrix step = expm(cplx(dt) * gen.mat);
        maps.push_back(Superoperator(n, step * maps.back().mat));
    }

    PropagationResult out{MapFamily::create(n, grid, std::move(maps)), {}};
    out.states.reserve(grid.size());
    for (const auto& m : out.family.maps) out.states.push_back(m.apply(rho0));
    return out;
}

namespace {

std::vector<double> cascade_rhs(const DecayModelSpec& spec, double t, const std::vector<double>& p) {
    const int n = spec.levels;
    std::vector<double> dp(n, 0.0);
    for (int k = 1; k < n; ++k) {
        const double flow = spec.rates[k - 1].at(t) * p[k];
        if (flow == 0.0) continue;
        dp[k] -= flow;
        const ComplexMatrix rho_k = spec.targets[k - 1].at(t);
        for (int m = 0; m < k; ++m) dp[m] += rho_k(m, m).real() * flow;
    }
    return dp;
}

} // namespace

std::vector<CascadeState> cascade_probs(const DecayModelSpec& spec, const CascadeState& p0,
                                        const std::vector<double>& grid) {
    const int n = spec.levels;
    require(static_cast<int>(p0.probs.size()) == n, ErrorKind::DimensionMismatch,
            "cascade_probs: probability vector size mismatch");

    std::vector<CascadeState> out;
    out.reserve(grid.size());
    out.push_back(p0);

    std::vector<double> p = p0.probs;
    for (size_t i = 0; i + 1 < grid.size(); ++i) {
        const double t = grid[i];
        const double h = grid[i + 1] - grid[i];

        double rate_scale = 0.0;
        for (int k = 1; k < n; ++k) rate_scale = std::max(rate_scale, std::abs(spec.rates[k - 1].at(t)));
        require(rate_scale * h <= 5.0, ErrorKind::StepTooLarge,
                "cascade_probs: rate * dt > 5, refine the grid");

        const std::vector<double> k1 = cascade_rhs(spec, t, p);
        std::vector<double> tmp(n);
        for (int m = 0; m < n; ++m) tmp[m] = p[m] + 0.5 * h * k1[m];
        const std::vector<double> k2 = cascade_rhs(spec, t + 0.5 * h, tmp);
        for (int m = 0; m < n; ++m) tmp[m] = p[m] + 0.5 * h * k2[m];
        const std::vector<double> k3 = cascade_rhs(spec, t + 0.5 * h, tmp);
        for (int m = 0; m < n; ++m) tmp[m] = p[m] + h * k3[m];
        const std::vector<double> k4 = cascade_rhs(spec, t + h, tmp);

        for (int m = 0; m < n; ++m) p[m] += (h / 6.0) * (k1[m] + 2.0 * k2[m] + 2.0 * k3[m] + k4[m]);
        out.push_back({p});
    }
    return out;
}

DecayModelSpec truncated(const DecayModelSpec& spec, int n) {
    require(n >= 2 && n <= spec.levels, ErrorKind::IndexOutOfRange, "truncated: need 2 <= n <= N");

    std::vector<RateTable> rates(spec.rates.begin(), spec.rates.begin() + (n - 1));
    std::vector<TargetTable> targets;
    targets.reserve(n - 1);
    for (int k = 1; k < n; ++k) {
        TargetTable t = spec.targets[k - 1];
        for (auto& rho : t.values) {
            ComplexMatrix cut(n, n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) cut(i, j) = rho(i, j);
            rho = std::move(cut);
        }
        targets.push_back(std::move(t));
    }
    return DecayModelSpec::create(n, std::move(rates), std::move(targets));
}

GeneratorSpec subdynamics_generator(const DecayModelSpec& spec, int n, double t) {
    return decay_generator(truncated(spec, n), t);
}

} // namespace qdiv
