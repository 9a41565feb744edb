#include "qdiv/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

namespace qdiv {

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<cplx>> rows) {
    int r = static_cast<int>(rows.size());
    require(r >= 1, ErrorKind::InvalidArgument, "from_rows: empty");
    int c = static_cast<int>(rows.begin()->size());
    ComplexMatrix m(r, c);
    int i = 0;
    for (const auto& row : rows) {
        require(static_cast<int>(row.size()) == c, ErrorKind::DimensionMismatch, "from_rows: ragged rows");
        int j = 0;
        for (cplx v : row) m(i, j++) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix m(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = std::conj((*this)(i, j));
    return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
    return m;
}

cplx ComplexMatrix::trace() const {
    require(is_square(), ErrorKind::NotSquare, "trace: matrix not square");
    cplx t = 0.0;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : data_) m = std::max(m, std::abs(v));
    return m;
}

double ComplexMatrix::norm_one() const {
    double best = 0.0;
    for (int j = 0; j < cols_; ++j) {
        double s = 0.0;
        for (int i = 0; i < rows_; ++i) s += std::abs((*this)(i, j));
        best = std::max(best, s);
    }
    return best;
}

double ComplexMatrix::norm_fro() const {
    double s = 0.0;
    for (const cplx& v : data_) s += std::norm(v);
    return std::sqrt(s);
}

double ComplexMatrix::herm_deviation() const {
    require(is_square(), ErrorKind::NotSquare, "herm_deviation: matrix not square");
    double m = 0.0;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            m = std::max(m, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::DimensionMismatch, "operator+=: shape mismatch");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
    require(rows_ == o.rows_ && cols_ == o.cols_, ErrorKind::DimensionMismatch, "operator-=: shape mismatch");
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx s) {
    for (cplx& v : data_) v *= s;
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator-(ComplexMatrix a) { return a *= cplx(-1.0); }
ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }
ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) { return matmul(a, b); }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.cols() == b.rows(), ErrorKind::DimensionMismatch, "matmul: inner dimensions differ");
    const int n = a.rows(), k = a.cols(), m = b.cols();
    ComplexMatrix c(n, m);

    const bool big = static_cast<long long>(n) * k * m >= 64LL * 64 * 64;

    // both operands stream sequentially against the transposed b
    const ComplexMatrix bt = b.transpose();

#pragma omp parallel for schedule(static) if (big)
    for (int i = 0; i < n; ++i) {
        const cplx* __restrict arow = a.data() + static_cast<size_t>(i) * k;
        cplx* __restrict crow = c.data() + static_cast<size_t>(i) * m;
        for (int j = 0; j < m; ++j) {
            const cplx* __restrict btrow = bt.data() + static_cast<size_t>(j) * k;
            cplx s0 = 0.0, s1 = 0.0;
            int kk = 0;
            for (; kk + 1 < k; kk += 2) {
                s0 += arow[kk] * btrow[kk];
                s1 += arow[kk + 1] * btrow[kk + 1];
            }
            if (kk < k) s0 += arow[kk] * btrow[kk];
            crow[j] = s0 + s1;
        }
    }
    return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ia = 0; ia < a.rows(); ++ia)
        for (int ja = 0; ja < a.cols(); ++ja) {
            const cplx av = a(ia, ja);
            if (av == cplx(0.0)) continue;
            for (int ib = 0; ib < b.rows(); ++ib)
                for (int jb = 0; jb < b.cols(); ++jb)
                    c(ia * b.rows() + ib, ja * b.cols() + jb) = av * b(ib, jb);
        }
    return c;
}

ComplexMatrix hermitize(const ComplexMatrix& a) {
    require(a.is_square(), ErrorKind::NotSquare, "hermitize: matrix not square");
    ComplexMatrix h(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            h(i, j) = 0.5 * (a(i, j) + std::conj(a(j, i)));
    return h;
}

ComplexMatrix leading_principal_submatrix(const ComplexMatrix& a, int j) {
    require(a.is_square(), ErrorKind::NotSquare, "leading_principal_submatrix: matrix not square");
    require(j >= 1 && j <= a.rows(), ErrorKind::IndexOutOfRange,
            "leading_principal_submatrix: order out of range");
    ComplexMatrix m(j, j);
    for (int r = 0; r < j; ++r)
        for (int c = 0; c < j; ++c) m(r, c) = a(r, c);
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::DimensionMismatch,
            "max_abs_diff: shape mismatch");
    double m = 0.0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - b(i, j)));
    return m;
}

} // namespace qdiv
