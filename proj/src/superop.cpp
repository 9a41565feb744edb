#include "qdiv/superop.hpp"

#include <cmath>
#include <string>

#include "qdiv/lu.hpp"

namespace qdiv {

std::vector<cplx> vec(const ComplexMatrix& x) {
    std::vector<cplx> v(static_cast<size_t>(x.rows()) * x.cols());
    for (int j = 0; j < x.cols(); ++j)
        for (int i = 0; i < x.rows(); ++i) v[static_cast<size_t>(j) * x.rows() + i] = x(i, j);
    return v;
}

ComplexMatrix unvec(const std::vector<cplx>& v, int dim) {
    require(static_cast<int>(v.size()) == dim * dim, ErrorKind::DimensionMismatch, "unvec: size mismatch");
    ComplexMatrix x(dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int i = 0; i < dim; ++i) x(i, j) = v[static_cast<size_t>(j) * dim + i];
    return x;
}

Superoperator::Superoperator(int d, ComplexMatrix m) : dim(d), mat(std::move(m)) {
    require(dim >= 1, ErrorKind::InvalidArgument, "Superoperator: dim must be >= 1");
    require(mat.rows() == dim * dim && mat.cols() == dim * dim, ErrorKind::DimensionMismatch,
            "Superoperator: matrix must be d^2 x d^2");
}

Superoperator Superoperator::identity(int d) {
    return Superoperator(d, ComplexMatrix::identity(d * d));
}

Superoperator Superoperator::from_terms(int d,
                                        const std::vector<std::pair<ComplexMatrix, ComplexMatrix>>& ab) {
    ComplexMatrix m = ComplexMatrix::zero(d * d, d * d);
    for (const auto& [a, b] : ab) {
        require(a.rows() == d && a.cols() == d && b.rows() == d && b.cols() == d,
                ErrorKind::DimensionMismatch, "from_terms: term dimension mismatch");
        // rho -> A rho B^dagger  ==  (conj(B) kron A)
        m += kron(b.conjugate(), a);
    }
    return Superoperator(d, std::move(m));
}

Superoperator Superoperator::from_kraus(const std::vector<ComplexMatrix>& kraus) {
    require(!kraus.empty(), ErrorKind::InvalidArgument, "from_kraus: empty set");
    const int d = kraus.front().rows();
    ComplexMatrix m = ComplexMatrix::zero(d * d, d * d);
    for (const auto& k : kraus) m += kron(k.conjugate(), k);
    return Superoperator(d, std::move(m));
}

Superoperator Superoperator::conjugation(const ComplexMatrix& u) {
    require(u.is_square(), ErrorKind::NotSquare, "conjugation: matrix not square");
    return Superoperator(u.rows(), kron(u.conjugate(), u));
}

ComplexMatrix Superoperator::apply(const ComplexMatrix& x) const {
    require(x.rows() == dim && x.cols() == dim, ErrorKind::DimensionMismatch, "apply: dimension mismatch");
    const std::vector<cplx> v = vec(x);
    std::vector<cplx> out(v.size(), 0.0);
    for (size_t i = 0; i < out.size(); ++i) {
        cplx s = 0.0;
        for (size_t j = 0; j < v.size(); ++j) s += mat(static_cast<int>(i), static_cast<int>(j)) * v[j];
        out[i] = s;
    }
    return unvec(out, dim);
}

Superoperator operator*(const Superoperator& a, const Superoperator& b) {
    require(a.dim == b.dim, ErrorKind::DimensionMismatch, "superoperator product: dimension mismatch");
    return Superoperator(a.dim, a.mat * b.mat);
}

ChoiMatrix choi(const Superoperator& s) {
    const int d = s.dim;
    ComplexMatrix c(d * d, d * d);
    // column l*d+k of s.mat is vec(S(|k><l|))
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l)
            for (int i = 0; i < d; ++i)
                for (int j = 0; j < d; ++j)
                    c(i * d + k, j * d + l) = s.mat(j * d + i, l * d + k);
    return {d, std::move(c)};
}

CptpVerdict is_cptp(const Superoperator& s, double tol) {
    const int d = s.dim;
    CptpVerdict v;

    const ChoiMatrix c = choi(s);
    const PsdVerdict psd = psd_check(hermitize(c.mat), tol);
    v.cp = psd.is_psd && c.mat.herm_deviation() <= tol * std::max(1.0, c.mat.max_abs());
    v.choi_min_eig = psd.min_eigenvalue;

    double dev = 0.0;
    for (int k = 0; k < d; ++k)
        for (int l = 0; l < d; ++l) {
            cplx tr = 0.0;
            for (int i = 0; i < d; ++i) tr += s.mat(i * d + i, l * d + k);
            if (k == l) tr -= 1.0;
            dev = std::max(dev, std::abs(tr));
        }
    v.tp_deviation = dev;
    v.tp = dev <= tol;
    return v;
}

SubspaceSplit::SubspaceSplit(int total, int sub) : total_dim(total), sub_dim(sub) {
    require(total >= 2, ErrorKind::DimensionTooSmall, "SubspaceSplit: total dimension must be >= 2");
    require(sub >= 1 && sub < total, ErrorKind::IndexOutOfRange,
            "SubspaceSplit: need 1 <= sub_dim < total_dim");
}

namespace {

// vec indices of L_{a1}, ordered so that the compressed map is directly a
// sub_dim-level superoperator in the same convention
std::vector<int> sub_indices(int d, int k) {
    std::vector<int> idx;
    idx.reserve(static_cast<size_t>(k) * k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k; ++i) idx.push_back(j * d + i);
    return idx;
}

std::vector<int> comp_indices(int d, int k) {
    std::vector<int> idx;
    idx.reserve(static_cast<size_t>(d) * d - static_cast<size_t>(k) * k);
    for (int v = 0; v < d * d; ++v) {
        const int i = v % d, j = v / d;
        if (i >= k || j >= k) idx.push_back(v);
    }
    return idx;
}

ComplexMatrix take(const ComplexMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    ComplexMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c) out(static_cast<int>(r), static_cast<int>(c)) = m(rows[r], cols[c]);
    return out;
}

} // namespace

CompressedBlocks compress(const Superoperator& s, const SubspaceSplit& split) {
    require(split.total_dim == s.dim, ErrorKind::DimensionMismatch, "compress: split dimension mismatch");
    const std::vector<int> sub = sub_indices(s.dim, split.sub_dim);
    const std::vector<int> comp = comp_indices(s.dim, split.sub_dim);

    CompressedBlocks b;
    b.aa = Superoperator(split.sub_dim, take(s.mat, sub, sub));
    b.ap = take(s.mat, sub, comp);
    b.pa = take(s.mat, comp, sub);
    b.pp = take(s.mat, comp, comp);
    return b;
}

MapFamily MapFamily::create(int dim, std::vector<double> times, std::vector<Superoperator> maps) {
    require(!times.empty() && times.size() == maps.size(), ErrorKind::DimensionMismatch,
            "MapFamily: times and maps must have equal nonzero length");
    require(std::abs(times.front()) <= 1e-15, ErrorKind::InvalidArgument, "MapFamily: grid must start at 0");
    for (size_t i = 1; i < times.size(); ++i)
        require(times[i] > times[i - 1], ErrorKind::InvalidArgument, "MapFamily: grid must be strictly increasing");
    for (const auto& m : maps)
        require(m.dim == dim, ErrorKind::DimensionMismatch, "MapFamily: map dimension mismatch");
    require(max_abs_diff(maps.front().mat, ComplexMatrix::identity(dim * dim)) <= 1e-12,
            ErrorKind::InvalidArgument, "MapFamily: maps[0] must be the identity");

    MapFamily f;
    f.dim = dim;
    f.times = std::move(times);
    f.maps = std::move(maps);
    return f;
}

bool is_invariant_subspace(const MapFamily& f, const SubspaceSplit& split, double tol) {
    require(split.total_dim == f.dim, ErrorKind::DimensionMismatch,
            "is_invariant_subspace: split dimension mismatch");
    for (const auto& m : f.maps) {
        const CompressedBlocks b = compress(m, split);
        if (b.pa.max_abs() > tol) return false;
        const CptpVerdict v = is_cptp(b.aa, tol);
        if (!v.tp) return false;
    }
    return true;
}

Superoperator block_inverse(const Superoperator& s, const SubspaceSplit& split) {
    const CompressedBlocks b = compress(s, split);
    require(b.pa.max_abs() <= 1e-10 * std::max(1.0, s.mat.max_abs()), ErrorKind::NotBlockTriangular,
            "block_inverse: lower block is not zero");
    require(cond1_estimate(b.aa.mat) < kCondThreshold, ErrorKind::SingularBlock,
            "block_inverse: aa block is ill-conditioned");
    require(cond1_estimate(b.pp) < kCondThreshold, ErrorKind::SingularBlock,
            "block_inverse: pp block is ill-conditioned");

    const ComplexMatrix aa_inv = inverse(b.aa.mat);
    const ComplexMatrix pp_inv = inverse(b.pp);
    const ComplexMatrix ap_inv = -(aa_inv * (b.ap * pp_inv));

    const int d = s.dim, k = split.sub_dim;
    const std::vector<int> sub = sub_indices(d, k);
    const std::vector<int> comp = comp_indices(d, k);

    ComplexMatrix full = ComplexMatrix::zero(d * d, d * d);
    for (size_t r = 0; r < sub.size(); ++r) {
        for (size_t c = 0; c < sub.size(); ++c) full(sub[r], sub[c]) = aa_inv(static_cast<int>(r), static_cast<int>(c));
        for (size_t c = 0; c < comp.size(); ++c) full(sub[r], comp[c]) = ap_inv(static_cast<int>(r), static_cast<int>(c));
    }
    for (size_t r = 0; r < comp.size(); ++r)
        for (size_t c = 0; c < comp.size(); ++c) full(comp[r], comp[c]) = pp_inv(static_cast<int>(r), static_cast<int>(c));

    Superoperator result(d, std::move(full));
    require(max_abs_diff(s.mat * result.mat, ComplexMatrix::identity(d * d)) <= 1e-8,
            ErrorKind::SingularBlock, "block_inverse: verification against the identity failed");
    return result;
}

Superoperator intermediate_map(const MapFamily& f, int i1, int i2) {
    require(i1 >= 0 && i2 >= i1 && i2 < f.size(), ErrorKind::IndexOutOfRange,
            "intermediate_map: indices out of range");
    const ComplexMatrix& e1 = f.maps[i1].mat;
    ComplexMatrix inv;
    try {
        inv = inverse(e1);
    } catch (const Error&) {
        fail(ErrorKind::SingularMap, "intermediate_map: map at t=" + std::to_string(f.times[i1]) + " is singular");
    }
    const double cond = e1.norm_one() * inv.norm_one();
    require(cond < kCondThreshold, ErrorKind::SingularMap,
            "intermediate_map: map at t=" + std::to_string(f.times[i1]) + " is ill-conditioned");
    return Superoperator(f.dim, f.maps[i2].mat * inv);
}

DivisibilityReport divisibility_scan(const MapFamily& f, double tol, bool pairwise) {
    std::vector<std::pair<int, int>> pairs;
    if (pairwise) {
        for (int i = 0; i < f.size(); ++i)
            for (int j = i + 1; j < f.size(); ++j) pairs.emplace_back(i, j);
    } else {
        for (int i = 0; i + 1 < f.size(); ++i) pairs.emplace_back(i, i + 1);
    }

    DivisibilityReport rep;
    rep.intervals.resize(pairs.size());
    bool failed = false;
    int fail_index = -1;
    std::string fail_msg;

#pragma omp parallel for schedule(dynamic)
    for (int p = 0; p < static_cast<int>(pairs.size()); ++p) {
        if (failed) continue;
        try {
            const Superoperator q = intermediate_map(f, pairs[p].first, pairs[p].second);
            const CptpVerdict v = is_cptp(q, tol);
            rep.intervals[p] = {pairs[p].first, pairs[p].second, v.cp, v.tp, v.choi_min_eig, v.tp_deviation};
        } catch (const Error& e) {
#pragma omp critical
            {
                if (!failed || p < fail_index) {
                    failed = true;
                    fail_index = p;
                    fail_msg = e.what();
                }
            }
        }
    }
    if (failed) fail(ErrorKind::SingularMap, fail_msg);

    rep.divisible = true;
    for (const auto& iv : rep.intervals) rep.divisible = rep.divisible && iv.cp && iv.tp;
    return rep;
}

double composition_gap(const MapFamily& f, const SubspaceSplit& split, int i1, int i2) {
    const Superoperator q = intermediate_map(f, i1, i2);
    const ComplexMatrix e2aa = compress(f.maps[i2], split).aa.mat;
    const ComplexMatrix e1aa = compress(f.maps[i1], split).aa.mat;
    const ComplexMatrix qaa = compress(q, split).aa.mat;
    return max_abs_diff(e2aa, qaa * e1aa);
}

} // namespace qdiv
